//! Binary products, levelwise pairs with EZ normalisation. Nondegenerate
//! simplices are the jointly nondegenerate pairs (the shuffles).

use super::{build_rule, EzSimplex, SSet, SimplexId, SimplexRule, SimplicialMap, SimplicialSet};
use crate::error::{Error, Result};
use crate::monotone::MonotoneMap;
use std::collections::HashMap;
use std::sync::Arc;

/// Short display form of a normal form within a named set.
pub fn ez_label(set: &SimplicialSet, ez: &EzSimplex) -> String {
    if ez.is_nondegenerate() {
        set.name(ez.base).to_string()
    } else {
        format!("{}*{}", set.name(ez.base), ez.collapse)
    }
}

struct ProductRule<'a> {
    left: &'a SimplicialSet,
    right: &'a SimplicialSet,
}

impl SimplexRule for ProductRule<'_> {
    type Code = (EzSimplex, EzSimplex);

    fn vertices(&self) -> Vec<(Self::Code, String)> {
        let mut out = Vec::new();
        for a in self.left.simplices(0) {
            for b in self.right.simplices(0) {
                let code = (EzSimplex::nondegenerate(a), EzSimplex::nondegenerate(b));
                let name = format!("({},{})", self.left.name(a), self.right.name(b));
                out.push((code, name));
            }
        }
        out
    }

    fn candidates(&self, n: usize) -> Vec<Self::Code> {
        let mut out = Vec::new();
        for a in self.left.all_ez(n) {
            for b in self.right.all_ez(n) {
                out.push((a.clone(), b));
            }
        }
        out
    }

    fn act(&self, code: &Self::Code, _dim: usize, op: &MonotoneMap) -> Self::Code {
        (self.left.act(&code.0, op), self.right.act(&code.1, op))
    }

    fn name(&self, code: &Self::Code, _dim: usize) -> String {
        format!(
            "({},{})",
            ez_label(self.left, &code.0),
            ez_label(self.right, &code.1)
        )
    }
}

#[derive(Clone)]
pub struct ProductSet {
    pub space: SSet,
    pub left: SSet,
    pub right: SSet,
    codes: Vec<Vec<(EzSimplex, EzSimplex)>>,
    lookup: Vec<HashMap<(EzSimplex, EzSimplex), usize>>,
}

impl ProductSet {
    /// The pair of component normal forms of an arbitrary simplex.
    pub fn decode(&self, ez: &EzSimplex) -> (EzSimplex, EzSimplex) {
        let (a, b) = &self.codes[ez.base.dim][ez.base.index];
        if ez.collapse.is_identity() {
            (a.clone(), b.clone())
        } else {
            (
                self.left.act(a, &ez.collapse),
                self.right.act(b, &ez.collapse),
            )
        }
    }

    /// Normal form of the pair `(a, b)`, both of dimension `n`.
    pub fn encode(&self, a: &EzSimplex, b: &EzSimplex) -> EzSimplex {
        debug_assert_eq!(a.dim(), b.dim());
        let n = a.dim();
        // shared repeat positions of the two collapses
        let shared: Vec<usize> = (0..n)
            .filter(|&i| {
                a.collapse.apply(i) == a.collapse.apply(i + 1)
                    && b.collapse.apply(i) == b.collapse.apply(i + 1)
            })
            .collect();
        let k = n - shared.len();
        // rho: [n] ->> [k] collapsing the shared positions
        let mut rho_vals = Vec::with_capacity(n + 1);
        let mut v = 0usize;
        rho_vals.push(0);
        for i in 1..=n {
            if !shared.contains(&(i - 1)) {
                v += 1;
            }
            rho_vals.push(v);
        }
        let rho = MonotoneMap::new(k, rho_vals).unwrap();
        // section of rho: first position of each class
        let mut section = Vec::with_capacity(k + 1);
        let mut next = 0usize;
        for (i, &rv) in rho.values().iter().enumerate() {
            if rv == next {
                section.push(i);
                next += 1;
            }
        }
        let restrict = |c: &MonotoneMap| {
            let vals: Vec<usize> = section.iter().map(|&i| c.apply(i)).collect();
            MonotoneMap::new(c.target(), vals).unwrap()
        };
        let a0 = EzSimplex {
            base: a.base,
            collapse: restrict(&a.collapse),
        };
        let b0 = EzSimplex {
            base: b.base,
            collapse: restrict(&b.collapse),
        };
        let index = *self.lookup[k]
            .get(&(a0, b0))
            .expect("jointly nondegenerate pair must be present in the product table");
        EzSimplex {
            base: SimplexId { dim: k, index },
            collapse: rho,
        }
    }

    pub fn proj_left(&self) -> SimplicialMap {
        SimplicialMap::from_fn(Arc::clone(&self.space), Arc::clone(&self.left), |id| {
            self.codes[id.dim][id.index].0.clone()
        })
        .expect("left projection is simplicial")
    }

    pub fn proj_right(&self) -> SimplicialMap {
        SimplicialMap::from_fn(Arc::clone(&self.space), Arc::clone(&self.right), |id| {
            self.codes[id.dim][id.index].1.clone()
        })
        .expect("right projection is simplicial")
    }

    /// The pairing `(f, g) : Z -> X × Y` of two maps with common source.
    pub fn pair(&self, f: &SimplicialMap, g: &SimplicialMap) -> Result<SimplicialMap> {
        if f.source != g.source {
            return Err(Error::malformed("pairing needs a common source"));
        }
        SimplicialMap::from_fn(Arc::clone(&f.source), Arc::clone(&self.space), |id| {
            self.encode(f.apply_id(id), g.apply_id(id))
        })
    }
}

/// Materialise the product of two simplicial sets.
pub fn product(left: &SSet, right: &SSet) -> ProductSet {
    let (top, truncated) = product_extent(left, right);
    let rule = ProductRule { left, right };
    let (space, codes) = build_rule(&rule, top, truncated);
    let lookup = codes
        .iter()
        .map(|level| {
            level
                .iter()
                .enumerate()
                .map(|(i, c)| (c.clone(), i))
                .collect()
        })
        .collect();
    ProductSet {
        space: Arc::new(space),
        left: Arc::clone(left),
        right: Arc::clone(right),
        codes,
        lookup,
    }
}

fn product_extent(left: &SimplicialSet, right: &SimplicialSet) -> (usize, bool) {
    let (Some(tl), Some(tr)) = (left.top_dim(), right.top_dim()) else {
        return (0, false);
    };
    match (left.is_truncated(), right.is_truncated()) {
        (false, false) => (tl + tr, false),
        (true, false) => (tl, true),
        (false, true) => (tr, true),
        (true, true) => (tl.min(tr), true),
    }
}

/// The induced map `f × g` between materialised products.
pub fn product_map(
    f: &SimplicialMap,
    g: &SimplicialMap,
    source: &ProductSet,
    target: &ProductSet,
) -> Result<SimplicialMap> {
    if source.left != f.source || source.right != g.source {
        return Err(Error::malformed("product_map: source mismatch"));
    }
    if target.left != f.target || target.right != g.target {
        return Err(Error::malformed("product_map: target mismatch"));
    }
    SimplicialMap::from_fn(
        Arc::clone(&source.space),
        Arc::clone(&target.space),
        |id| {
            let (a, b) = source.decode(&EzSimplex::nondegenerate(id));
            target.encode(&f.apply(&a), &g.apply(&b))
        },
    )
}

#[cfg(test)]
mod tests {
    use super::super::{cube, is_isomorphic, point, standard_simplex};
    use super::*;
    use crate::budget::Budget;

    fn arc(s: SimplicialSet) -> SSet {
        Arc::new(s)
    }

    #[test]
    fn interval_squared_is_cube_two() {
        let d1 = arc(standard_simplex(1));
        let p = product(&d1, &d1);
        assert_eq!(p.space.counts(), vec![4, 5, 2]);
        let c2 = arc(cube(2));
        assert!(is_isomorphic(&p.space, &c2, &mut Budget::default())
            .unwrap()
            .is_some());
    }

    #[test]
    fn unit_law() {
        let d2 = arc(standard_simplex(2));
        let pt = arc(point());
        let p = product(&pt, &d2);
        assert_eq!(p.space.counts(), d2.counts());
    }

    #[test]
    fn shuffle_count_interval_times_triangle() {
        let d1 = arc(standard_simplex(1));
        let d2 = arc(standard_simplex(2));
        let p = product(&d1, &d2);
        // (1,2)-shuffles: C(3,1) = 3 top-dimensional simplices
        assert_eq!(p.space.count(3), 3);
        p.space.verify_identities().unwrap();
    }

    #[test]
    fn encode_decode_roundtrip() {
        let d1 = arc(standard_simplex(1));
        let d2 = arc(standard_simplex(2));
        let p = product(&d1, &d2);
        for n in 0..=3 {
            for ez in p.space.all_ez(n) {
                let (a, b) = p.decode(&ez);
                assert_eq!(p.encode(&a, &b), ez);
            }
        }
    }

    #[test]
    fn projections_commute_with_faces() {
        let d1 = arc(standard_simplex(1));
        let d2 = arc(standard_simplex(2));
        let p = product(&d1, &d2);
        p.proj_left().verify().unwrap();
        p.proj_right().verify().unwrap();
    }
}
