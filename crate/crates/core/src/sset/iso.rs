//! Isomorphism search: a backtracking hunt for a graded bijection commuting
//! with faces, returned as a certificate when found.

use super::{EzSimplex, SSet, SimplexId, SimplicialMap};
use crate::budget::Budget;
use crate::error::Result;
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct IsoCertificate {
    pub map: SimplicialMap,
}

/// Search for an isomorphism between the stored tables of two simplicial
/// sets. Returns a certificate, or `None` when the sets are not isomorphic
/// (up to the stored levels).
pub fn is_isomorphic(
    left: &SSet,
    right: &SSet,
    budget: &mut Budget,
) -> Result<Option<IsoCertificate>> {
    if left.counts() != right.counts() {
        return Ok(None);
    }
    let top = match left.top_dim() {
        None => {
            return Ok(Some(IsoCertificate {
                map: SimplicialMap::new_unchecked(
                    Arc::clone(left),
                    Arc::clone(right),
                    Vec::new(),
                ),
            }))
        }
        Some(t) => t,
    };

    budget.set_context("isomorphism search");

    // slots: all nondegenerate simplices, dimension-major
    let mut slots: Vec<SimplexId> = Vec::new();
    for n in 0..=top {
        for index in 0..left.count(n) {
            slots.push(SimplexId { dim: n, index });
        }
    }

    let mut assign: Vec<Vec<Option<usize>>> =
        left.counts().iter().map(|&c| vec![None; c]).collect();
    let mut used: Vec<Vec<bool>> = left.counts().iter().map(|&c| vec![false; c]).collect();

    fn candidate_ok(
        left: &SSet,
        right: &SSet,
        assign: &[Vec<Option<usize>>],
        id: SimplexId,
        cand: usize,
    ) -> bool {
        if id.dim == 0 {
            return true;
        }
        let t = EzSimplex::nondegenerate(SimplexId {
            dim: id.dim,
            index: cand,
        });
        for (i, f) in left.data(id).faces.iter().enumerate() {
            let mapped_base = match assign[f.base.dim][f.base.index] {
                Some(m) => m,
                None => return false,
            };
            let expected = right.act(
                &EzSimplex::nondegenerate(SimplexId {
                    dim: f.base.dim,
                    index: mapped_base,
                }),
                &f.collapse,
            );
            match right.face(&t, i) {
                Ok(got) if got == expected => {}
                _ => return false,
            }
        }
        true
    }

    fn dfs(
        left: &SSet,
        right: &SSet,
        slots: &[SimplexId],
        k: usize,
        assign: &mut Vec<Vec<Option<usize>>>,
        used: &mut Vec<Vec<bool>>,
        budget: &mut Budget,
    ) -> Result<bool> {
        if k == slots.len() {
            return Ok(true);
        }
        let id = slots[k];
        for cand in 0..right.count(id.dim) {
            if used[id.dim][cand] {
                continue;
            }
            budget.spend(1)?;
            if candidate_ok(left, right, assign, id, cand) {
                assign[id.dim][id.index] = Some(cand);
                used[id.dim][cand] = true;
                if dfs(left, right, slots, k + 1, assign, used, budget)? {
                    return Ok(true);
                }
                assign[id.dim][id.index] = None;
                used[id.dim][cand] = false;
            }
        }
        Ok(false)
    }

    if dfs(left, right, &slots, 0, &mut assign, &mut used, budget)? {
        let map = SimplicialMap::from_fn(Arc::clone(left), Arc::clone(right), |id| {
            EzSimplex::nondegenerate(SimplexId {
                dim: id.dim,
                index: assign[id.dim][id.index].unwrap(),
            })
        })?;
        debug_assert!(map.is_isomorphism());
        Ok(Some(IsoCertificate { map }))
    } else {
        Ok(None)
    }
}

/// Try to extend a vertex bijection to an isomorphism, for sets whose
/// simplices are determined by their vertex tuples (poset nerves, cubes,
/// subcomplexes of standard simplices). `vmap[i]` is the image vertex of
/// left vertex `i`.
pub fn iso_from_vertex_bijection(
    left: &SSet,
    right: &SSet,
    vmap: &[usize],
) -> Option<SimplicialMap> {
    if left.counts() != right.counts() {
        return None;
    }
    let top = left.top_dim()?;
    // index right simplices by vertex tuple
    use std::collections::HashMap;
    let mut by_vertices: Vec<HashMap<Vec<usize>, usize>> = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let mut m = HashMap::new();
        for id in right.simplices(n) {
            let vs = right.vertices_of(&EzSimplex::nondegenerate(id));
            if m.insert(vs, id.index).is_some() {
                return None; // not vertex-determined
            }
        }
        by_vertices.push(m);
    }
    let map = SimplicialMap::from_fn(Arc::clone(left), Arc::clone(right), |id| {
        let vs: Vec<usize> = left
            .vertices_of(&EzSimplex::nondegenerate(id))
            .into_iter()
            .map(|v| vmap[v])
            .collect();
        match by_vertices[id.dim].get(&vs) {
            Some(&index) => EzSimplex::nondegenerate(SimplexId { dim: id.dim, index }),
            // poison with an out-of-range collapse-free vertex to force
            // verification failure below
            None => EzSimplex {
                base: SimplexId { dim: 0, index: 0 },
                collapse: crate::monotone::MonotoneMap::constant(id.dim, 0, 0),
            },
        }
    })
    .ok()?;
    if map.is_isomorphism() {
        Some(map)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::super::{boundary, horn, standard_simplex, SimplicialSet};
    use super::*;

    fn arc(s: SimplicialSet) -> SSet {
        Arc::new(s)
    }

    #[test]
    fn identity_certificate() {
        let d2 = arc(standard_simplex(2));
        let cert = is_isomorphic(&d2, &d2, &mut Budget::default())
            .unwrap()
            .unwrap();
        cert.map.verify().unwrap();
    }

    #[test]
    fn horns_of_dimension_two_are_isomorphic() {
        let l21 = arc(horn(2, 1));
        let l20 = arc(horn(2, 0));
        assert!(is_isomorphic(&l21, &l20, &mut Budget::default())
            .unwrap()
            .is_some());
    }

    #[test]
    fn horn_is_not_boundary() {
        let l21 = arc(horn(2, 1));
        let b2 = arc(boundary(2));
        // 2 nondegenerate edges vs 3
        assert!(is_isomorphic(&l21, &b2, &mut Budget::default())
            .unwrap()
            .is_none());
    }

    #[test]
    fn vertex_bijection_route() {
        let l21 = arc(horn(2, 1));
        let l20 = arc(horn(2, 0));
        // Λ²₁ has edges 0-1, 1-2; Λ²₀ has edges 0-1, 0-2. Send 1 -> 0.
        let m = iso_from_vertex_bijection(&l21, &l20, &[1, 0, 2]).unwrap();
        assert!(m.is_isomorphism());
        assert!(iso_from_vertex_bijection(&l21, &l20, &[0, 1, 2]).is_none());
    }
}
