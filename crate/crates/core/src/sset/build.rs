//! Standard complexes: simplices, boundaries, horns, cubes, disjoint unions.

use super::{build_rule, EzSimplex, SimplexRule, SimplicialSet};
use crate::monotone::{combinations, MonotoneMap};

/// Rule for subcomplexes of the standard simplex Δⁿ. Codes are weakly
/// increasing value lists of operators `[m] -> [n]`; nondegenerate simplices
/// are the strictly increasing ones, i.e. vertex subsets.
struct SimplexSubsetRule {
    n: usize,
    allowed: Box<dyn Fn(&[usize]) -> bool>,
}

fn vertex_name(v: usize) -> String {
    v.to_string()
}

fn subset_name(vals: &[usize]) -> String {
    vals.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("-")
}

impl SimplexRule for SimplexSubsetRule {
    type Code = Vec<usize>;

    fn vertices(&self) -> Vec<(Self::Code, String)> {
        (0..=self.n)
            .filter(|&v| (self.allowed)(&[v]))
            .map(|v| (vec![v], vertex_name(v)))
            .collect()
    }

    fn candidates(&self, m: usize) -> Vec<Self::Code> {
        combinations(self.n + 1, m + 1)
            .into_iter()
            .filter(|c| (self.allowed)(c))
            .collect()
    }

    fn act(&self, code: &Self::Code, _dim: usize, op: &MonotoneMap) -> Self::Code {
        op.values().iter().map(|&i| code[i]).collect()
    }

    fn name(&self, code: &Self::Code, _dim: usize) -> String {
        subset_name(code)
    }
}

/// The standard `n`-simplex, nondegenerate `k`-simplices being the
/// injections `[k] -> [n]`.
pub fn standard_simplex(n: usize) -> SimplicialSet {
    simplex_subset(n, n, move |_| true)
}

/// The subcomplex of Δⁿ spanned by the vertex subsets satisfying `allowed`
/// (which must be closed under subsets), materialised up to `top`.
pub fn simplex_subset(
    n: usize,
    top: usize,
    allowed: impl Fn(&[usize]) -> bool + 'static,
) -> SimplicialSet {
    let rule = SimplexSubsetRule {
        n,
        allowed: Box::new(allowed),
    };
    build_rule(&rule, top, false).0
}

/// ∂Δⁿ: all proper faces of the standard simplex.
pub fn boundary(n: usize) -> SimplicialSet {
    assert!(n >= 1, "boundary needs n >= 1");
    simplex_subset(n, n.saturating_sub(1), move |c| c.len() <= n)
}

/// The horn Λⁿᵏ: the boundary minus the k-th face.
pub fn horn(n: usize, k: usize) -> SimplicialSet {
    assert!(n >= 1 && k <= n, "horn needs 0 <= k <= n, n >= 1");
    simplex_subset(n, n.saturating_sub(1), move |c| {
        if c.len() == n + 1 {
            return false;
        }
        if c.len() == n {
            // the missing vertex must not be exactly k
            let missing = (0..=n).find(|v| !c.contains(v)).unwrap();
            missing != k
        } else {
            true
        }
    })
}

/// Rule for the simplicial cube ⊓ᵏ = (Δ¹)^k and its subcomplexes. Codes are
/// `k`-tuples of monotone maps `[r] -> [1]`, stored as 0/1 value rows.
struct CubeRule {
    k: usize,
    allowed: Box<dyn Fn(&[Vec<u8>]) -> bool>,
}

fn bit_rows(k: usize, r: usize) -> Vec<Vec<Vec<u8>>> {
    // all k-tuples of weakly increasing 0/1 rows of length r+1
    let rows: Vec<Vec<u8>> = (0..=r + 1)
        .map(|ones| {
            let mut row = vec![0u8; r + 1];
            for v in row.iter_mut().skip(r + 1 - ones) {
                *v = 1;
            }
            row
        })
        .collect();
    let mut out: Vec<Vec<Vec<u8>>> = vec![Vec::new()];
    for _ in 0..k {
        let mut next = Vec::new();
        for tuple in &out {
            for row in &rows {
                let mut t = tuple.clone();
                t.push(row.clone());
                next.push(t);
            }
        }
        out = next;
    }
    out
}

fn cube_name(code: &[Vec<u8>]) -> String {
    if code.is_empty() {
        return "pt".to_string();
    }
    let parts: Vec<String> = code
        .iter()
        .map(|row| row.iter().map(|b| b.to_string()).collect::<String>())
        .collect();
    format!("({})", parts.join(","))
}

impl SimplexRule for CubeRule {
    type Code = Vec<Vec<u8>>;

    fn vertices(&self) -> Vec<(Self::Code, String)> {
        bit_rows(self.k, 0)
            .into_iter()
            .filter(|c| (self.allowed)(c))
            .map(|c| {
                let name = cube_name(&c);
                (c, name)
            })
            .collect()
    }

    fn candidates(&self, r: usize) -> Vec<Self::Code> {
        bit_rows(self.k, r)
            .into_iter()
            .filter(|c| (self.allowed)(c))
            .collect()
    }

    fn act(&self, code: &Self::Code, _dim: usize, op: &MonotoneMap) -> Self::Code {
        code.iter()
            .map(|row| op.values().iter().map(|&i| row[i]).collect())
            .collect()
    }

    fn name(&self, code: &Self::Code, _dim: usize) -> String {
        cube_name(code)
    }
}

fn build_cube(k: usize, allowed: impl Fn(&[Vec<u8>]) -> bool + 'static) -> SimplicialSet {
    let rule = CubeRule {
        k,
        allowed: Box::new(allowed),
    };
    build_rule(&rule, k, false).0
}

/// The simplicial cube ⊓ᵏ.
pub fn cube(k: usize) -> SimplicialSet {
    build_cube(k, |_| true)
}

fn row_constant(row: &[u8]) -> bool {
    row.iter().all(|&b| b == 0) || row.iter().all(|&b| b == 1)
}

/// ∂⊓ᵏ: simplices for which some coordinate row is constant.
pub fn cube_boundary(k: usize) -> SimplicialSet {
    build_cube(k, |code| code.iter().any(|row| row_constant(row)))
}

/// The cubical horn with open face `(j, e)`, `1 <= j <= k`, `e ∈ {0,1}`:
/// simplices with some row `i != j` constant, or row `j` constant at `e`.
pub fn cube_horn(k: usize, j: usize, e: u8) -> SimplicialSet {
    assert!((1..=k).contains(&j) && e <= 1, "cube_horn needs 1 <= j <= k, e in {{0,1}}");
    build_cube(k, move |code| {
        code.iter()
            .enumerate()
            .any(|(i, row)| i + 1 != j && row_constant(row))
            || code[j - 1].iter().all(|&b| b == e)
    })
}

/// Rule pairing two materialised simplicial sets as a coproduct.
struct UnionRule<'a> {
    left: &'a SimplicialSet,
    right: &'a SimplicialSet,
    prefixes: (String, String),
}

impl SimplexRule for UnionRule<'_> {
    type Code = (u8, EzSimplex);

    fn vertices(&self) -> Vec<(Self::Code, String)> {
        let mut out = Vec::new();
        for id in self.left.simplices(0) {
            out.push((
                (0, EzSimplex::nondegenerate(id)),
                format!("{}{}", self.prefixes.0, self.left.name(id)),
            ));
        }
        for id in self.right.simplices(0) {
            out.push((
                (1, EzSimplex::nondegenerate(id)),
                format!("{}{}", self.prefixes.1, self.right.name(id)),
            ));
        }
        out
    }

    fn candidates(&self, n: usize) -> Vec<Self::Code> {
        let mut out = Vec::new();
        for id in self.left.simplices(n) {
            out.push((0, EzSimplex::nondegenerate(id)));
        }
        for id in self.right.simplices(n) {
            out.push((1, EzSimplex::nondegenerate(id)));
        }
        out
    }

    fn act(&self, code: &Self::Code, _dim: usize, op: &MonotoneMap) -> Self::Code {
        let side = if code.0 == 0 { self.left } else { self.right };
        (code.0, side.act(&code.1, op))
    }

    fn name(&self, code: &Self::Code, _dim: usize) -> String {
        let (side, prefix) = if code.0 == 0 {
            (self.left, &self.prefixes.0)
        } else {
            (self.right, &self.prefixes.1)
        };
        format!("{}{}", prefix, side.name(code.1.base))
    }
}

/// Disjoint union, with name prefixes to keep simplex names unique.
pub fn disjoint_union(left: &SimplicialSet, right: &SimplicialSet) -> SimplicialSet {
    let top = left
        .top_dim()
        .unwrap_or(0)
        .max(right.top_dim().unwrap_or(0));
    let rule = UnionRule {
        left,
        right,
        prefixes: ("a.".to_string(), "b.".to_string()),
    };
    build_rule(&rule, top, left.is_truncated() || right.is_truncated()).0
}

/// The empty simplicial set.
pub fn empty() -> SimplicialSet {
    SimplicialSet::from_levels(Vec::new(), false)
}

/// The simplicial map `Δᵐ -> Δⁿ` induced by a monotone operator, for sets
/// built by [`standard_simplex`] (vertex names are the ordinal values).
pub fn simplex_operator_map(
    source: &super::SSet,
    target: &super::SSet,
    op: &MonotoneMap,
) -> crate::error::Result<super::SimplicialMap> {
    let op = op.clone();
    super::SimplicialMap::from_fn(source.clone(), target.clone(), move |id| {
        let inj = source.vertices_of(&EzSimplex::nondegenerate(id));
        let values: Vec<usize> = inj.iter().map(|&v| op.apply(v)).collect();
        let total = MonotoneMap::new(op.target(), values).expect("monotone image");
        let (surj, mono) = total.epi_mono();
        let name = subset_name(mono.values());
        let base = target
            .find_by_name(mono.source(), &name)
            .expect("standard simplex face present");
        EzSimplex {
            base,
            collapse: surj,
        }
    })
}

/// Δ⁰.
pub fn point() -> SimplicialSet {
    standard_simplex(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn horn_and_boundary_counts() {
        assert_eq!(horn(2, 1).counts(), vec![3, 2]);
        assert_eq!(boundary(1).counts(), vec![2]);
        // enumerate faces of Δ³ minus {top, d3}: vertices 4, edges 6, triangles 3
        assert_eq!(horn(3, 3).counts(), vec![4, 6, 3]);
        assert_eq!(boundary(3).counts(), vec![4, 6, 4]);
    }

    #[test]
    fn cube_counts_from_tuple_enumeration() {
        assert_eq!(cube(0).counts(), vec![1]);
        assert_eq!(cube(1).counts(), vec![2, 1]);
        // pairs (ρ1, ρ2) of monotone maps, discarding jointly degenerate ones
        assert_eq!(cube(2).counts(), vec![4, 5, 2]);
        cube(2).verify_identities().unwrap();
        cube(3).verify_identities().unwrap();
    }

    #[test]
    fn cube_boundary_and_horn_counts() {
        assert_eq!(cube_boundary(1).counts(), vec![2]);
        assert_eq!(cube_boundary(2).counts(), vec![4, 4]);
        // the horn keeps three of the four boundary edges
        assert_eq!(cube_horn(2, 2, 0).counts(), vec![4, 3]);
        assert!(cube_boundary(0).is_empty());
    }

    #[test]
    fn union_counts() {
        let u = disjoint_union(&standard_simplex(1), &point());
        assert_eq!(u.counts(), vec![3, 1]);
        u.verify_identities().unwrap();
    }
}
