//! Joins of simplicial sets: `(X ⋆ Y)_n` consists of the simplices of `X`,
//! the simplices of `Y`, and pairs `(x_p, y_q)` with `p + q + 1 = n`.

use super::product::ez_label;
use super::{build_rule, EzSimplex, SSet, SimplexRule, SimplicialMap, SimplicialSet};
use crate::error::{Error, Result};
use crate::monotone::MonotoneMap;
use std::collections::HashMap;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum JoinCode {
    Left(EzSimplex),
    Right(EzSimplex),
    Pair(EzSimplex, EzSimplex),
}

struct JoinRule<'a> {
    left: &'a SimplicialSet,
    right: &'a SimplicialSet,
}

impl JoinRule<'_> {
    fn act_code(&self, code: &JoinCode, op: &MonotoneMap) -> JoinCode {
        match code {
            JoinCode::Left(x) => JoinCode::Left(self.left.act(x, op)),
            JoinCode::Right(y) => JoinCode::Right(self.right.act(y, op)),
            JoinCode::Pair(x, y) => {
                let p = x.dim();
                let n = op.target();
                debug_assert_eq!(n, p + y.dim() + 1);
                let prefix: Vec<usize> = op
                    .values()
                    .iter()
                    .copied()
                    .filter(|&v| v <= p)
                    .collect();
                let suffix: Vec<usize> = op
                    .values()
                    .iter()
                    .copied()
                    .filter(|&v| v > p)
                    .map(|v| v - p - 1)
                    .collect();
                if suffix.is_empty() {
                    let op1 = MonotoneMap::new(p, prefix).unwrap();
                    JoinCode::Left(self.left.act(x, &op1))
                } else if prefix.is_empty() {
                    let op2 = MonotoneMap::new(y.dim(), suffix).unwrap();
                    JoinCode::Right(self.right.act(y, &op2))
                } else {
                    let op1 = MonotoneMap::new(p, prefix).unwrap();
                    let op2 = MonotoneMap::new(y.dim(), suffix).unwrap();
                    JoinCode::Pair(self.left.act(x, &op1), self.right.act(y, &op2))
                }
            }
        }
    }
}

impl SimplexRule for JoinRule<'_> {
    type Code = JoinCode;

    fn vertices(&self) -> Vec<(Self::Code, String)> {
        let mut out = Vec::new();
        for a in self.left.simplices(0) {
            out.push((
                JoinCode::Left(EzSimplex::nondegenerate(a)),
                format!("x.{}", self.left.name(a)),
            ));
        }
        for b in self.right.simplices(0) {
            out.push((
                JoinCode::Right(EzSimplex::nondegenerate(b)),
                format!("y.{}", self.right.name(b)),
            ));
        }
        out
    }

    fn candidates(&self, n: usize) -> Vec<Self::Code> {
        let mut out = Vec::new();
        for a in self.left.simplices(n) {
            out.push(JoinCode::Left(EzSimplex::nondegenerate(a)));
        }
        for b in self.right.simplices(n) {
            out.push(JoinCode::Right(EzSimplex::nondegenerate(b)));
        }
        for p in 0..n {
            let q = n - 1 - p;
            for a in self.left.simplices(p) {
                for b in self.right.simplices(q) {
                    out.push(JoinCode::Pair(
                        EzSimplex::nondegenerate(a),
                        EzSimplex::nondegenerate(b),
                    ));
                }
            }
        }
        out
    }

    fn act(&self, code: &Self::Code, _dim: usize, op: &MonotoneMap) -> Self::Code {
        self.act_code(code, op)
    }

    fn name(&self, code: &Self::Code, _dim: usize) -> String {
        match code {
            JoinCode::Left(x) => format!("x.{}", ez_label(self.left, x)),
            JoinCode::Right(y) => format!("y.{}", ez_label(self.right, y)),
            JoinCode::Pair(x, y) => format!(
                "{}*{}",
                ez_label(self.left, x),
                ez_label(self.right, y)
            ),
        }
    }
}

#[derive(Clone)]
pub struct JoinSet {
    pub space: SSet,
    pub left: SSet,
    pub right: SSet,
    codes: Vec<Vec<JoinCode>>,
    lookup: Vec<HashMap<JoinCode, usize>>,
}

impl JoinSet {
    pub fn code(&self, ez: &EzSimplex) -> JoinCode {
        let rule = JoinRule {
            left: &self.left,
            right: &self.right,
        };
        let base = &self.codes[ez.base.dim][ez.base.index];
        if ez.collapse.is_identity() {
            base.clone()
        } else {
            rule.act_code(base, &ez.collapse)
        }
    }

    /// Normal form of a (possibly degenerate) join code of dimension `n`.
    pub fn encode(&self, code: &JoinCode, n: usize) -> EzSimplex {
        let rule = JoinRule {
            left: &self.left,
            right: &self.right,
        };
        let mut c = code.clone();
        let mut d = n;
        let mut collapse = MonotoneMap::identity(n);
        'outer: loop {
            if d == 0 {
                break;
            }
            for i in 0..d {
                let faced = rule.act_code(&c, &MonotoneMap::coface(d, i));
                let back = rule.act_code(&faced, &MonotoneMap::codegeneracy(d - 1, i));
                if back == c {
                    c = faced;
                    collapse = MonotoneMap::codegeneracy(d - 1, i).compose(&collapse);
                    d -= 1;
                    continue 'outer;
                }
            }
            break;
        }
        let index = *self.lookup[d]
            .get(&c)
            .expect("join code must normalise into the table");
        EzSimplex {
            base: super::SimplexId { dim: d, index },
            collapse,
        }
    }

    /// Inclusion `X -> X ⋆ Y`.
    pub fn include_left(&self) -> Result<SimplicialMap> {
        SimplicialMap::from_fn(Arc::clone(&self.left), Arc::clone(&self.space), |id| {
            self.encode(&JoinCode::Left(EzSimplex::nondegenerate(id)), id.dim)
        })
    }

    /// Inclusion `Y -> X ⋆ Y`.
    pub fn include_right(&self) -> Result<SimplicialMap> {
        SimplicialMap::from_fn(Arc::clone(&self.right), Arc::clone(&self.space), |id| {
            self.encode(&JoinCode::Right(EzSimplex::nondegenerate(id)), id.dim)
        })
    }
}

/// Materialise the join `X ⋆ Y`.
pub fn join(left: &SSet, right: &SSet) -> JoinSet {
    let (top, truncated) = join_extent(left, right);
    let rule = JoinRule { left, right };
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
    JoinSet {
        space: Arc::new(space),
        left: Arc::clone(left),
        right: Arc::clone(right),
        codes,
        lookup,
    }
}

fn join_extent(left: &SimplicialSet, right: &SimplicialSet) -> (usize, bool) {
    match (left.top_dim(), right.top_dim()) {
        (None, None) => (0, false),
        (Some(t), None) => (t, left.is_truncated()),
        (None, Some(t)) => (t, right.is_truncated()),
        (Some(tl), Some(tr)) => match (left.is_truncated(), right.is_truncated()) {
            (false, false) => (tl + tr + 1, false),
            (true, false) => (tl, true),
            (false, true) => (tr, true),
            (true, true) => (tl.min(tr), true),
        },
    }
}

/// The induced map `f ⋆ g` between materialised joins.
pub fn join_map(
    f: &SimplicialMap,
    g: &SimplicialMap,
    source: &JoinSet,
    target: &JoinSet,
) -> Result<SimplicialMap> {
    if source.left != f.source || source.right != g.source {
        return Err(Error::malformed("join_map: source mismatch"));
    }
    if target.left != f.target || target.right != g.target {
        return Err(Error::malformed("join_map: target mismatch"));
    }
    SimplicialMap::from_fn(
        Arc::clone(&source.space),
        Arc::clone(&target.space),
        |id| {
            let mapped = match source.code(&EzSimplex::nondegenerate(id)) {
                JoinCode::Left(x) => JoinCode::Left(f.apply(&x)),
                JoinCode::Right(y) => JoinCode::Right(g.apply(&y)),
                JoinCode::Pair(x, y) => JoinCode::Pair(f.apply(&x), g.apply(&y)),
            };
            target.encode(&mapped, id.dim)
        },
    )
}

#[cfg(test)]
mod tests {
    use super::super::{boundary, empty, horn, is_isomorphic, point, standard_simplex};
    use super::*;
    use crate::budget::Budget;

    fn arc(s: SimplicialSet) -> SSet {
        Arc::new(s)
    }

    #[test]
    fn join_with_point_is_next_simplex() {
        let d1 = arc(standard_simplex(1));
        let pt = arc(point());
        let j = join(&d1, &pt);
        let d2 = arc(standard_simplex(2));
        assert!(is_isomorphic(&j.space, &d2, &mut Budget::default())
            .unwrap()
            .is_some());
    }

    #[test]
    fn boundary_join_point_is_outer_horn() {
        let b2 = arc(boundary(2));
        let pt = arc(point());
        let j = join(&b2, &pt);
        let l33 = arc(horn(3, 3));
        assert!(is_isomorphic(&j.space, &l33, &mut Budget::default())
            .unwrap()
            .is_some());
    }

    #[test]
    fn empty_join_is_identity() {
        let e = arc(empty());
        let d2 = arc(standard_simplex(2));
        let j = join(&e, &d2);
        assert_eq!(j.space.counts(), d2.counts());
        let j2 = join(&d2, &e);
        assert_eq!(j2.space.counts(), d2.counts());
    }

    #[test]
    fn join_identities() {
        let d1 = arc(standard_simplex(1));
        let b1 = arc(boundary(1));
        let j = join(&d1, &b1);
        j.space.verify_identities().unwrap();
        j.include_left().unwrap().verify().unwrap();
        j.include_right().unwrap().verify().unwrap();
    }
}
