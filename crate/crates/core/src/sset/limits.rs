//! Levelwise pullbacks and equalizers with EZ renormalisation.

use super::product::{product, ProductSet};
use super::{EzSimplex, SSet, SimplicialMap};
use crate::error::{Error, Result};
use std::sync::Arc;

#[derive(Clone)]
pub struct PullbackSet {
    pub space: SSet,
    /// Inclusion into the ambient product of the two domains.
    pub include: SimplicialMap,
    pub product: ProductSet,
    pub proj_left: SimplicialMap,
    pub proj_right: SimplicialMap,
}

/// The pullback of `f : E1 -> B <- E2 : g`, as the subcomplex of `E1 × E2`
/// of pairs with equal images. Mismatched boundaries in the input maps are
/// detected while the component pairs are renormalised.
pub fn pullback(f: &SimplicialMap, g: &SimplicialMap) -> Result<PullbackSet> {
    if f.target != g.target {
        return Err(Error::malformed("pullback legs must share a codomain"));
    }
    let prod = product(&f.source, &g.source);
    let mut keep: Vec<Vec<bool>> = prod
        .space
        .counts()
        .iter()
        .map(|&c| vec![false; c])
        .collect();
    for n in 0..keep.len() {
        for index in 0..keep[n].len() {
            let id = super::SimplexId { dim: n, index };
            let (a, b) = prod.decode(&EzSimplex::nondegenerate(id));
            keep[n][index] = f.apply(&a) == g.apply(&b);
        }
    }
    let (sub, kept) = prod.space.subcomplex(&keep)?;
    let space = Arc::new(sub);
    let include = SimplicialMap::inclusion(&space, &prod.space, &kept)?;
    let proj_left = prod.proj_left().compose(&include)?;
    let proj_right = prod.proj_right().compose(&include)?;
    Ok(PullbackSet {
        space,
        include,
        product: prod,
        proj_left,
        proj_right,
    })
}

#[derive(Clone)]
pub struct EqualizerSet {
    pub space: SSet,
    pub include: SimplicialMap,
}

/// The equalizer of a parallel pair `f, g : X -> Y`, as a subcomplex of `X`.
pub fn equalizer(f: &SimplicialMap, g: &SimplicialMap) -> Result<EqualizerSet> {
    if f.source != g.source || f.target != g.target {
        return Err(Error::malformed("equalizer needs a parallel pair"));
    }
    let x = &f.source;
    let mut keep: Vec<Vec<bool>> = x.counts().iter().map(|&c| vec![false; c]).collect();
    for n in 0..keep.len() {
        for index in 0..keep[n].len() {
            let id = super::SimplexId { dim: n, index };
            keep[n][index] = f.apply_id(id) == g.apply_id(id);
        }
    }
    let (sub, kept) = x.subcomplex(&keep)?;
    let space = Arc::new(sub);
    let include = SimplicialMap::inclusion(&space, x, &kept)?;
    Ok(EqualizerSet { space, include })
}

#[cfg(test)]
mod tests {
    use super::super::{point, standard_simplex, SimplicialSet};
    use super::*;

    fn arc(s: SimplicialSet) -> SSet {
        Arc::new(s)
    }

    #[test]
    fn pullback_along_identity_is_other_leg() {
        let d2 = arc(standard_simplex(2));
        let id = SimplicialMap::identity(&d2);
        let pb = pullback(&id, &id).unwrap();
        assert_eq!(pb.space.counts(), d2.counts());
    }

    #[test]
    fn equalizer_of_equal_maps_is_domain() {
        let d2 = arc(standard_simplex(2));
        let id = SimplicialMap::identity(&d2);
        let eq = equalizer(&id, &id).unwrap();
        assert_eq!(eq.space.counts(), d2.counts());
    }

    #[test]
    fn cospan_of_points_over_interval() {
        let pt = arc(point());
        let d1 = arc(standard_simplex(1));
        let v0 = SimplicialMap::vertex_map(&pt, &d1, 0).unwrap();
        let pb = pullback(&v0, &v0).unwrap();
        assert_eq!(pb.space.counts(), vec![1]);
    }

    #[test]
    fn disjoint_cospan_is_empty() {
        let pt = arc(point());
        let d1 = arc(standard_simplex(1));
        let v0 = SimplicialMap::vertex_map(&pt, &d1, 0).unwrap();
        let v1 = SimplicialMap::vertex_map(&pt, &d1, 1).unwrap();
        let pb = pullback(&v0, &v1).unwrap();
        assert!(pb.space.is_empty());
    }
}
