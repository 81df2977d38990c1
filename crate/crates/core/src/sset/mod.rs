//! Simplicial sets as graded tables of nondegenerate simplices.
//!
//! Only nondegenerate simplices are stored; a general simplex is an
//! [`EzSimplex`]: a nondegenerate base together with a surjective collapse
//! operator. Face lists record, for each nondegenerate simplex, the normal
//! forms of its codimension-one faces, and every other operator action is
//! derived from those by the epi-mono factorisation.
//!
//! Lazily presented sets (function complexes, nerves) are materialised up to
//! a dimension cap; `truncated` records whether nondegenerate simplices may
//! exist above the top stored level.

mod build;
mod funcomplex;
mod iso;
mod join;
mod limits;
mod map;
mod nervecat;
mod product;

pub use build::{
    boundary, cube, cube_boundary, cube_horn, disjoint_union, empty, horn, point, simplex_subset,
    standard_simplex,
};
pub use funcomplex::{function_complex, FunctionComplex};
pub use iso::{is_isomorphic, iso_from_vertex_bijection, IsoCertificate};
pub use join::{join, join_map, JoinSet};
pub use limits::{equalizer, pullback, EqualizerSet, PullbackSet};
pub use map::{
    enumerate_maps, enumerate_maps_constrained, exists_map_constrained, SimplicialMap,
};
pub use nervecat::{codiscrete, nerve, walking_iso, FiniteCategory};
pub use product::{product, product_map, ProductSet};

use crate::error::{Error, Result};
use crate::monotone::MonotoneMap;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// Reference to a nondegenerate simplex of its owning simplicial set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexId {
    pub dim: usize,
    pub index: usize,
}

/// A simplex in Eilenberg–Zilber normal form: a nondegenerate base and a
/// surjective collapse operator. Every simplex has exactly one such form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EzSimplex {
    pub base: SimplexId,
    pub collapse: MonotoneMap,
}

impl EzSimplex {
    pub fn nondegenerate(base: SimplexId) -> Self {
        EzSimplex {
            collapse: MonotoneMap::identity(base.dim),
            base,
        }
    }

    /// Dimension of the (possibly degenerate) simplex this form denotes.
    pub fn dim(&self) -> usize {
        self.collapse.source()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.collapse.is_identity()
    }
}

impl fmt::Debug for EzSimplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_nondegenerate() {
            write!(f, "({},{})", self.base.dim, self.base.index)
        } else {
            write!(
                f,
                "({},{})[{}]",
                self.base.dim, self.base.index, self.collapse
            )
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplexData {
    pub name: String,
    /// Normal forms of the faces `d_0 s, ..., d_n s`; empty for vertices.
    pub faces: Vec<EzSimplex>,
}

#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialSet {
    levels: Vec<Vec<SimplexData>>,
    truncated: bool,
}

impl SimplicialSet {
    pub fn from_levels(levels: Vec<Vec<SimplexData>>, truncated: bool) -> Self {
        let mut s = SimplicialSet { levels, truncated };
        while s
            .levels
            .last()
            .map(|l| l.is_empty())
            .unwrap_or(false)
        {
            s.levels.pop();
        }
        s
    }

    /// The number of nondegenerate `n`-simplices.
    pub fn count(&self, n: usize) -> usize {
        self.levels.get(n).map(|l| l.len()).unwrap_or(0)
    }

    /// Nondegenerate counts per stored level, e.g. `(3, 3, 1)` for the
    /// standard 2-simplex.
    pub fn counts(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.len()).collect()
    }

    /// Top stored level; `None` for the empty simplicial set.
    pub fn top_dim(&self) -> Option<usize> {
        if self.levels.is_empty() {
            None
        } else {
            Some(self.levels.len() - 1)
        }
    }

    /// Whether nondegenerate simplices above the top stored level may exist.
    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn data(&self, id: SimplexId) -> &SimplexData {
        &self.levels[id.dim][id.index]
    }

    pub fn name(&self, id: SimplexId) -> &str {
        &self.data(id).name
    }

    pub fn simplices(&self, n: usize) -> impl Iterator<Item = SimplexId> + '_ {
        (0..self.count(n)).map(move |index| SimplexId { dim: n, index })
    }

    pub fn find_by_name(&self, dim: usize, name: &str) -> Option<SimplexId> {
        self.levels.get(dim)?.iter().position(|d| d.name == name).map(|index| SimplexId { dim, index })
    }

    /// Apply the operator `op : [m] -> [dim s]` to a simplex, renormalising.
    pub fn act(&self, s: &EzSimplex, op: &MonotoneMap) -> EzSimplex {
        debug_assert_eq!(op.target(), s.dim());
        let gamma = s.collapse.compose(op);
        let (surj, inj) = gamma.epi_mono();
        let part = self.apply_injection(s.base, &inj);
        EzSimplex {
            base: part.base,
            collapse: part.collapse.compose(&surj),
        }
    }

    fn apply_injection(&self, id: SimplexId, inj: &MonotoneMap) -> EzSimplex {
        if inj.is_identity() {
            return EzSimplex::nondegenerate(id);
        }
        debug_assert_eq!(inj.target(), id.dim);
        let j = (0..=id.dim)
            .rev()
            .find(|v| !inj.values().contains(v))
            .expect("strict injection misses a value");
        let face = &self.levels[id.dim][id.index].faces[j];
        let vals: Vec<usize> = inj
            .values()
            .iter()
            .map(|&v| if v > j { v - 1 } else { v })
            .collect();
        let inj2 = MonotoneMap::new(id.dim - 1, vals).expect("face restriction is monotone");
        self.act(face, &inj2)
    }

    /// `d_i s` in normal form.
    pub fn face(&self, s: &EzSimplex, i: usize) -> Result<EzSimplex> {
        let n = s.dim();
        if n == 0 || i > n {
            return Err(Error::IndexOutOfRange {
                context: "face".into(),
                index: i,
                limit: n,
            });
        }
        Ok(self.act(s, &MonotoneMap::coface(n, i)))
    }

    /// `s_i s` in normal form.
    pub fn degeneracy(&self, s: &EzSimplex, i: usize) -> Result<EzSimplex> {
        let n = s.dim();
        if i > n {
            return Err(Error::IndexOutOfRange {
                context: "degeneracy".into(),
                index: i,
                limit: n,
            });
        }
        Ok(self.act(s, &MonotoneMap::codegeneracy(n, i)))
    }

    /// All `n`-simplices (including degenerate ones) in canonical order.
    pub fn all_ez(&self, n: usize) -> Vec<EzSimplex> {
        let mut out = Vec::new();
        let top = self.levels.len();
        for j in 0..=n.min(top.saturating_sub(1)) {
            if j >= top {
                break;
            }
            for index in 0..self.count(j) {
                let id = SimplexId { dim: j, index };
                for surj in MonotoneMap::surjections(n, j) {
                    out.push(EzSimplex {
                        base: id,
                        collapse: surj,
                    });
                }
            }
        }
        out
    }

    /// Number of `n`-simplices including degenerate ones.
    pub fn total_count(&self, n: usize) -> usize {
        let mut total = 0usize;
        for j in 0..=n.min(self.levels.len().saturating_sub(1)) {
            total += self.count(j) * binomial(n, n - j);
        }
        if self.levels.is_empty() {
            0
        } else {
            total
        }
    }

    /// The `i`-th vertex of a simplex, as an index into level 0.
    pub fn vertex(&self, s: &EzSimplex, i: usize) -> usize {
        let v = self.act(s, &MonotoneMap::constant(0, s.dim(), i));
        v.base.index
    }

    pub fn vertices_of(&self, s: &EzSimplex) -> Vec<usize> {
        (0..=s.dim()).map(|i| self.vertex(s, i)).collect()
    }

    /// All edge images `s · β` for injections `β : [1] -> [dim s]`.
    pub fn edges_of(&self, s: &EzSimplex) -> Vec<EzSimplex> {
        let n = s.dim();
        let mut out = Vec::new();
        for b in 0..n {
            for e in b + 1..=n {
                let inc = MonotoneMap::new(n, vec![b, e]).unwrap();
                out.push(self.act(s, &inc));
            }
        }
        out
    }

    /// Exhaustively check the simplicial identities `d_i d_j = d_{j-1} d_i`
    /// (for `i < j`) on every stored level, plus the face/degeneracy and
    /// degeneracy/degeneracy identities on normal forms.
    pub fn verify_identities(&self) -> Result<()> {
        let top = self.levels.len();
        for n in 0..top {
            for index in 0..self.count(n) {
                let s = EzSimplex::nondegenerate(SimplexId { dim: n, index });
                for j in 1..=n {
                    for i in 0..j {
                        let a = self.face(&self.face(&s, j)?, i)?;
                        let b = self.face(&self.face(&s, i)?, j - 1)?;
                        if a != b {
                            return Err(Error::other(format!(
                                "simplicial identity d_{i} d_{j} failed at level {n} simplex {index}"
                            )));
                        }
                    }
                }
                for i in 0..=n {
                    // d_i s_i = id and d_{i+1} s_i = id
                    let up = self.degeneracy(&s, i)?;
                    if self.face(&up, i)? != s || self.face(&up, i + 1)? != s {
                        return Err(Error::other(format!(
                            "degeneracy identity failed at level {n} simplex {index} (i={i})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Restrict to the simplices flagged in `keep` (per level, per index).
    /// Fails unless the selection is closed under faces. Returns the
    /// subcomplex and, per level, the original index of each kept simplex.
    pub fn subcomplex(&self, keep: &[Vec<bool>]) -> Result<(SimplicialSet, Vec<Vec<usize>>)> {
        let top = self.levels.len();
        if keep.len() != top {
            return Err(Error::malformed("keep mask must cover every stored level"));
        }
        let mut new_index: Vec<HashMap<usize, usize>> = vec![HashMap::new(); top];
        let mut kept: Vec<Vec<usize>> = vec![Vec::new(); top];
        for n in 0..top {
            for index in 0..self.count(n) {
                if keep[n][index] {
                    new_index[n].insert(index, kept[n].len());
                    kept[n].push(index);
                }
            }
        }
        let mut levels: Vec<Vec<SimplexData>> = Vec::with_capacity(top);
        for n in 0..top {
            let mut level = Vec::with_capacity(kept[n].len());
            for &old in &kept[n] {
                let data = &self.levels[n][old];
                let mut faces = Vec::with_capacity(data.faces.len());
                for f in &data.faces {
                    let mapped = new_index[f.base.dim].get(&f.base.index).ok_or_else(|| {
                        Error::malformed(format!(
                            "subcomplex not face-closed: face of {} missing",
                            data.name
                        ))
                    })?;
                    faces.push(EzSimplex {
                        base: SimplexId {
                            dim: f.base.dim,
                            index: *mapped,
                        },
                        collapse: f.collapse.clone(),
                    });
                }
                level.push(SimplexData {
                    name: data.name.clone(),
                    faces,
                });
            }
            levels.push(level);
        }
        Ok((SimplicialSet::from_levels(levels, self.truncated), kept))
    }

    /// Print a short structural summary.
    pub fn info(&self) -> String {
        let counts = self.counts();
        format!(
            "levels {:?}{}",
            counts,
            if self.truncated { " (truncated)" } else { "" }
        )
    }
}

impl fmt::Debug for SimplicialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialSet({})", self.info())
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num = 1usize;
    for i in 0..k {
        num = num * (n - i) / (i + 1);
    }
    num
}

/// Shared handle; all larger structures reference simplicial sets through it.
pub type SSet = Arc<SimplicialSet>;

/// Rule-driven construction: a rule enumerates candidate codes per level and
/// implements the operator action on codes; the builder extracts the
/// nondegenerate simplices, normal-form face lists, and canonical order.
pub trait SimplexRule {
    type Code: Clone + Ord + std::hash::Hash + fmt::Debug;

    /// Canonically ordered vertex codes with display names.
    fn vertices(&self) -> Vec<(Self::Code, String)>;

    /// A superset of the nondegenerate `n`-simplices, `n >= 1`.
    fn candidates(&self, n: usize) -> Vec<Self::Code>;

    /// Operator action `code · op` for `op : [m] -> [dim]`.
    fn act(&self, code: &Self::Code, dim: usize, op: &MonotoneMap) -> Self::Code;

    fn name(&self, code: &Self::Code, dim: usize) -> String;
}

/// Is the code degenerate at position `i` (i.e. `s_i d_i c = c`)?
fn code_degenerate_at<R: SimplexRule>(rule: &R, code: &R::Code, dim: usize, i: usize) -> bool {
    let faced = rule.act(code, dim, &MonotoneMap::coface(dim, i));
    let back = rule.act(&faced, dim - 1, &MonotoneMap::codegeneracy(dim - 1, i));
    back == *code
}

/// Normal form of a code: strip degeneracies, then look the base up.
fn ez_of_code<R: SimplexRule>(
    rule: &R,
    lookup: &[HashMap<R::Code, usize>],
    code: &R::Code,
    dim: usize,
) -> EzSimplex {
    let mut c = code.clone();
    let mut d = dim;
    let mut collapse = MonotoneMap::identity(dim);
    'outer: loop {
        if d == 0 {
            break;
        }
        for i in 0..d {
            if code_degenerate_at(rule, &c, d, i) {
                c = rule.act(&c, d, &MonotoneMap::coface(d, i));
                let sigma = MonotoneMap::codegeneracy(d - 1, i);
                collapse = sigma.compose(&collapse);
                d -= 1;
                continue 'outer;
            }
        }
        break;
    }
    let index = *lookup[d]
        .get(&c)
        .unwrap_or_else(|| panic!("rule face escaped the candidate set at dim {d}: {c:?}"));
    EzSimplex {
        base: SimplexId { dim: d, index },
        collapse,
    }
}

/// Materialise a rule up to `top`. Returns the set together with the code of
/// each nondegenerate simplex (level by level, in canonical order).
pub fn build_rule<R: SimplexRule>(
    rule: &R,
    top: usize,
    truncated: bool,
) -> (SimplicialSet, Vec<Vec<R::Code>>) {
    let mut levels: Vec<Vec<SimplexData>> = Vec::new();
    let mut codes: Vec<Vec<R::Code>> = Vec::new();
    let mut lookup: Vec<HashMap<R::Code, usize>> = Vec::new();

    let verts = rule.vertices();
    let mut level0 = Vec::new();
    let mut lookup0 = HashMap::new();
    let mut codes0 = Vec::new();
    for (code, name) in verts {
        lookup0.insert(code.clone(), level0.len());
        level0.push(SimplexData {
            name,
            faces: Vec::new(),
        });
        codes0.push(code);
    }
    levels.push(level0);
    lookup.push(lookup0);
    codes.push(codes0);

    for n in 1..=top {
        let mut cands = rule.candidates(n);
        cands.sort();
        cands.dedup();
        let mut nondeg: Vec<(Vec<EzSimplex>, R::Code)> = Vec::new();
        for code in cands {
            if (0..n).any(|i| code_degenerate_at(rule, &code, n, i)) {
                continue;
            }
            let faces: Vec<EzSimplex> = (0..=n)
                .map(|i| {
                    let fc = rule.act(&code, n, &MonotoneMap::coface(n, i));
                    ez_of_code(rule, &lookup, &fc, n - 1)
                })
                .collect();
            nondeg.push((faces, code));
        }
        // Canonical order: lexicographic on the face tuple, code breaking ties.
        nondeg.sort();
        let mut level = Vec::with_capacity(nondeg.len());
        let mut look = HashMap::new();
        let mut code_row = Vec::with_capacity(nondeg.len());
        for (faces, code) in nondeg {
            look.insert(code.clone(), level.len());
            level.push(SimplexData {
                name: rule.name(&code, n),
                faces,
            });
            code_row.push(code);
        }
        levels.push(level);
        lookup.push(look);
        codes.push(code_row);
    }

    (SimplicialSet::from_levels(levels, truncated), codes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_simplex_counts() {
        assert_eq!(standard_simplex(2).counts(), vec![3, 3, 1]);
        assert_eq!(standard_simplex(0).counts(), vec![1]);
        assert_eq!(standard_simplex(3).counts(), vec![4, 6, 4, 1]);
    }

    #[test]
    fn identities_hold_on_small_complexes() {
        for n in 0..=4 {
            standard_simplex(n).verify_identities().unwrap();
        }
        boundary(3).verify_identities().unwrap();
        horn(3, 1).verify_identities().unwrap();
    }

    #[test]
    fn degeneracy_then_face_is_identity() {
        let d2 = standard_simplex(2);
        let top = EzSimplex::nondegenerate(SimplexId { dim: 2, index: 0 });
        for i in 0..=2 {
            let up = d2.degeneracy(&top, i).unwrap();
            assert_eq!(d2.face(&up, i).unwrap(), top);
        }
    }

    #[test]
    fn ez_normal_form_is_order_independent() {
        // s_1 s_0 x = s_0 s_0 x for a vertex x; both normalise to the same pair
        let d1 = standard_simplex(1);
        let v = EzSimplex::nondegenerate(SimplexId { dim: 0, index: 0 });
        let a = d1
            .degeneracy(&d1.degeneracy(&v, 0).unwrap(), 1)
            .unwrap();
        let b = d1
            .degeneracy(&d1.degeneracy(&v, 0).unwrap(), 0)
            .unwrap();
        assert_eq!(a, b);
        assert_eq!(a.base.dim, 0);
    }

    #[test]
    fn face_of_doubly_degenerate_renormalizes() {
        // Take the edge e of Δ¹, form s_1 s_0 e (a 3-simplex), apply d_1:
        // the result must be a valid EZ form over stored simplices.
        let d1 = standard_simplex(1);
        let e = EzSimplex::nondegenerate(SimplexId { dim: 1, index: 0 });
        let double = d1
            .degeneracy(&d1.degeneracy(&e, 0).unwrap(), 1)
            .unwrap();
        assert_eq!(double.dim(), 3);
        let f = d1.face(&double, 1).unwrap();
        assert_eq!(f.dim(), 2);
        assert!(f.collapse.is_surjective());
        // oracle: compare against direct operator composition on [3]
        let op = MonotoneMap::codegeneracy(1, 0);
        let op = MonotoneMap::codegeneracy(2, 1).compose(&MonotoneMap::coface(3, 1));
        let _ = op; // the two-step route below is the independent calculation
        let direct = d1.act(
            &EzSimplex::nondegenerate(SimplexId { dim: 1, index: 0 }),
            &MonotoneMap::codegeneracy(1, 0)
                .compose(&MonotoneMap::codegeneracy(2, 1))
                .compose(&MonotoneMap::coface(3, 1)),
        );
        assert_eq!(f, direct);
    }

    #[test]
    fn total_counts_match_binomial_formula() {
        let d2 = standard_simplex(2);
        // |Δ²_n| = C(n+3, 3) - ... easier: level 1 total = 3 nondeg edges + 3
        // degenerate = 6; formula: monotone maps [1]->[2]: C(4,2) = 6
        assert_eq!(d2.total_count(1), 6);
        // level 2: all monotone [2]->[2]: C(5,2) = 10
        assert_eq!(d2.total_count(2), 10);
    }
}
