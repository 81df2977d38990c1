//! Simplicial maps: assignments on nondegenerate simplices in normal form,
//! checked for face compatibility, plus the exhaustive map enumerator that
//! backs fillers, lifting problems, and counting arguments.

use super::{EzSimplex, SSet, SimplexId};
use crate::budget::Budget;
use crate::error::{Error, Result};
use std::fmt;
use std::sync::Arc;

#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialMap {
    pub source: SSet,
    pub target: SSet,
    /// Per dimension, per nondegenerate source index, the image normal form.
    assign: Vec<Vec<EzSimplex>>,
}

impl SimplicialMap {
    /// Build and verify face compatibility on every stored level.
    pub fn new(source: SSet, target: SSet, assign: Vec<Vec<EzSimplex>>) -> Result<Self> {
        let m = SimplicialMap {
            source,
            target,
            assign,
        };
        m.verify()?;
        Ok(m)
    }

    /// Build without verification; callers must guarantee compatibility.
    pub(crate) fn new_unchecked(source: SSet, target: SSet, assign: Vec<Vec<EzSimplex>>) -> Self {
        SimplicialMap {
            source,
            target,
            assign,
        }
    }

    /// Construct by evaluating `f` on every nondegenerate simplex, verifying
    /// face compatibility as levels are filled.
    pub fn from_fn(
        source: SSet,
        target: SSet,
        f: impl Fn(SimplexId) -> EzSimplex,
    ) -> Result<Self> {
        let top = source.top_dim();
        let mut assign: Vec<Vec<EzSimplex>> = Vec::new();
        if let Some(top) = top {
            for n in 0..=top {
                let mut level = Vec::with_capacity(source.count(n));
                for id in source.simplices(n) {
                    let img = f(id);
                    if img.dim() != n {
                        return Err(Error::malformed(format!(
                            "image of a {n}-simplex has dimension {}",
                            img.dim()
                        )));
                    }
                    level.push(img);
                }
                assign.push(level);
            }
        }
        SimplicialMap::new(source, target, assign)
    }

    pub fn verify(&self) -> Result<()> {
        if self.assign.len() != self.source.counts().len() {
            return Err(Error::malformed("assignment levels do not match source"));
        }
        for (n, level) in self.assign.iter().enumerate() {
            if level.len() != self.source.count(n) {
                return Err(Error::malformed(format!(
                    "assignment at level {n} has wrong length"
                )));
            }
            for (index, img) in level.iter().enumerate() {
                if img.dim() != n {
                    return Err(Error::malformed(format!(
                        "image dimension mismatch at level {n} index {index}"
                    )));
                }
                if n == 0 {
                    continue;
                }
                let id = SimplexId { dim: n, index };
                for i in 0..=n {
                    let src_face = &self.source.data(id).faces[i];
                    let expected = self.apply(src_face);
                    let got = self.target.face(img, i)?;
                    if expected != got {
                        return Err(Error::FaceIncompatible {
                            dim: n,
                            simplex: index,
                            face: i,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Image of an arbitrary simplex in normal form.
    pub fn apply(&self, s: &EzSimplex) -> EzSimplex {
        let img = &self.assign[s.base.dim][s.base.index];
        if s.collapse.is_identity() {
            img.clone()
        } else {
            self.target.act(img, &s.collapse)
        }
    }

    pub fn apply_id(&self, id: SimplexId) -> &EzSimplex {
        &self.assign[id.dim][id.index]
    }

    pub fn assignment(&self) -> &[Vec<EzSimplex>] {
        &self.assign
    }

    pub fn identity(set: &SSet) -> Self {
        let assign = set
            .counts()
            .iter()
            .enumerate()
            .map(|(n, &c)| {
                (0..c)
                    .map(|index| EzSimplex::nondegenerate(SimplexId { dim: n, index }))
                    .collect()
            })
            .collect();
        SimplicialMap {
            source: Arc::clone(set),
            target: Arc::clone(set),
            assign,
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SimplicialMap) -> Result<SimplicialMap> {
        if other.target != self.source {
            return Err(Error::malformed("composition boundary mismatch"));
        }
        let assign = other
            .assign
            .iter()
            .map(|level| level.iter().map(|ez| self.apply(ez)).collect())
            .collect();
        Ok(SimplicialMap {
            source: Arc::clone(&other.source),
            target: Arc::clone(&self.target),
            assign,
        })
    }

    /// Monomorphism test: images of nondegenerate simplices are
    /// nondegenerate and pairwise distinct per level.
    pub fn is_mono(&self) -> bool {
        for level in &self.assign {
            let mut seen = std::collections::HashSet::new();
            for img in level {
                if !img.is_nondegenerate() || !seen.insert(img.clone()) {
                    return false;
                }
            }
        }
        true
    }

    /// Isomorphism test: a levelwise bijection onto nondegenerate simplices.
    pub fn is_isomorphism(&self) -> bool {
        if self.source.counts() != self.target.counts() {
            return false;
        }
        self.is_mono()
    }

    pub fn inverse(&self) -> Result<SimplicialMap> {
        if !self.is_isomorphism() {
            return Err(Error::malformed("not an isomorphism"));
        }
        let mut assign: Vec<Vec<EzSimplex>> = self
            .target
            .counts()
            .iter()
            .map(|&c| vec![EzSimplex::nondegenerate(SimplexId { dim: 0, index: 0 }); c])
            .collect();
        for (n, level) in self.assign.iter().enumerate() {
            for (index, img) in level.iter().enumerate() {
                assign[img.base.dim][img.base.index] =
                    EzSimplex::nondegenerate(SimplexId { dim: n, index });
            }
        }
        Ok(SimplicialMap {
            source: Arc::clone(&self.target),
            target: Arc::clone(&self.source),
            assign,
        })
    }

    /// The constant map collapsing everything to a vertex of the target.
    pub fn constant(source: &SSet, target: &SSet, vertex: usize) -> Result<SimplicialMap> {
        if vertex >= target.count(0) {
            return Err(Error::IndexOutOfRange {
                context: "constant map vertex".into(),
                index: vertex,
                limit: target.count(0),
            });
        }
        let base = SimplexId {
            dim: 0,
            index: vertex,
        };
        SimplicialMap::from_fn(Arc::clone(source), Arc::clone(target), |id| EzSimplex {
            base,
            collapse: crate::monotone::MonotoneMap::constant(id.dim, 0, 0),
        })
    }

    /// The map Δ⁰ -> target picking out a vertex.
    pub fn vertex_map(point: &SSet, target: &SSet, vertex: usize) -> Result<SimplicialMap> {
        SimplicialMap::constant(point, target, vertex)
    }

    /// Inclusion of a subcomplex produced by [`SimplicialSet::subcomplex`],
    /// given the kept-index table it returned.
    pub fn inclusion(sub: &SSet, ambient: &SSet, kept: &[Vec<usize>]) -> Result<SimplicialMap> {
        SimplicialMap::from_fn(Arc::clone(sub), Arc::clone(ambient), |id| {
            EzSimplex::nondegenerate(SimplexId {
                dim: id.dim,
                index: kept[id.dim][id.index],
            })
        })
    }

    /// The full image as a subcomplex of the target, with inclusion data.
    pub fn image_mask(&self) -> Vec<Vec<bool>> {
        let mut keep: Vec<Vec<bool>> = self
            .target
            .counts()
            .iter()
            .map(|&c| vec![false; c])
            .collect();
        for level in &self.assign {
            for img in level {
                keep[img.base.dim][img.base.index] = true;
            }
        }
        // close under faces
        let top = keep.len();
        for n in (1..top).rev() {
            for index in 0..keep[n].len() {
                if keep[n][index] {
                    for f in &self.target.data(SimplexId { dim: n, index }).faces {
                        keep[f.base.dim][f.base.index] = true;
                    }
                }
            }
        }
        keep
    }
}

impl fmt::Debug for SimplicialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SimplicialMap({} -> {})",
            self.source.info(),
            self.target.info()
        )
    }
}

/// Enumerate all simplicial maps `source -> target` on the stored levels of
/// the source, in canonical order.
pub fn enumerate_maps(source: &SSet, target: &SSet, budget: &mut Budget) -> Result<Vec<SimplicialMap>> {
    enumerate_maps_constrained(source, target, &[], &|_, _| true, budget)
}

/// Enumerate maps with some values prescribed (`(id, image)` pairs) and an
/// extra per-assignment predicate (checked on every nondegenerate simplex).
pub fn enumerate_maps_constrained(
    source: &SSet,
    target: &SSet,
    prescribed: &[(SimplexId, EzSimplex)],
    post: &dyn Fn(SimplexId, &EzSimplex) -> bool,
    budget: &mut Budget,
) -> Result<Vec<SimplicialMap>> {
    let mut out = Vec::new();
    search_maps(source, target, prescribed, post, budget, &mut |m| {
        out.push(m);
        true
    })?;
    Ok(out)
}

/// First map satisfying the constraints, if any.
pub fn exists_map_constrained(
    source: &SSet,
    target: &SSet,
    prescribed: &[(SimplexId, EzSimplex)],
    post: &dyn Fn(SimplexId, &EzSimplex) -> bool,
    budget: &mut Budget,
) -> Result<Option<SimplicialMap>> {
    let mut found = None;
    search_maps(source, target, prescribed, post, budget, &mut |m| {
        found = Some(m);
        false
    })?;
    Ok(found)
}

fn search_maps(
    source: &SSet,
    target: &SSet,
    prescribed: &[(SimplexId, EzSimplex)],
    post: &dyn Fn(SimplexId, &EzSimplex) -> bool,
    budget: &mut Budget,
    emit: &mut dyn FnMut(SimplicialMap) -> bool,
) -> Result<()> {
    let Some(top) = source.top_dim() else {
        // unique empty map
        emit(SimplicialMap::new_unchecked(
            Arc::clone(source),
            Arc::clone(target),
            Vec::new(),
        ));
        return Ok(());
    };

    // Slot order: all nondegenerate simplices, dimension-major.
    let mut slots: Vec<SimplexId> = Vec::new();
    for n in 0..=top {
        for index in 0..source.count(n) {
            slots.push(SimplexId { dim: n, index });
        }
    }
    let mut fixed: Vec<Vec<Option<EzSimplex>>> = source
        .counts()
        .iter()
        .map(|&c| vec![None; c])
        .collect();
    for (id, img) in prescribed {
        if img.dim() != id.dim {
            return Err(Error::malformed("prescribed image has wrong dimension"));
        }
        fixed[id.dim][id.index] = Some(img.clone());
    }

    // Candidate pools per dimension.
    let pools: Vec<Vec<EzSimplex>> = (0..=top).map(|n| target.all_ez(n)).collect();

    struct Ctx<'a> {
        source: &'a SSet,
        target: &'a SSet,
        slots: Vec<SimplexId>,
        fixed: Vec<Vec<Option<EzSimplex>>>,
        pools: Vec<Vec<EzSimplex>>,
        post: &'a dyn Fn(SimplexId, &EzSimplex) -> bool,
    }

    fn faces_ok(ctx: &Ctx, assign: &[Vec<EzSimplex>], id: SimplexId, cand: &EzSimplex) -> bool {
        if id.dim == 0 {
            return true;
        }
        for (i, sf) in ctx.source.data(id).faces.iter().enumerate() {
            let expected = {
                let img = &assign[sf.base.dim][sf.base.index];
                ctx.target.act(img, &sf.collapse)
            };
            match ctx.target.face(cand, i) {
                Ok(got) if got == expected => {}
                _ => return false,
            }
        }
        true
    }

    fn dfs(
        ctx: &Ctx,
        k: usize,
        assign: &mut Vec<Vec<EzSimplex>>,
        budget: &mut Budget,
        emit: &mut dyn FnMut(SimplicialMap) -> bool,
        keep_going: &mut bool,
    ) -> Result<()> {
        if !*keep_going {
            return Ok(());
        }
        if k == ctx.slots.len() {
            let m = SimplicialMap::new_unchecked(
                Arc::clone(ctx.source),
                Arc::clone(ctx.target),
                assign.clone(),
            );
            if !emit(m) {
                *keep_going = false;
            }
            return Ok(());
        }
        let id = ctx.slots[k];
        if let Some(img) = ctx.fixed[id.dim][id.index].clone() {
            budget.spend(1)?;
            if faces_ok(ctx, assign, id, &img) && (ctx.post)(id, &img) {
                assign[id.dim].push(img);
                dfs(ctx, k + 1, assign, budget, emit, keep_going)?;
                assign[id.dim].pop();
            }
            return Ok(());
        }
        for cand in &ctx.pools[id.dim] {
            budget.spend(1)?;
            if faces_ok(ctx, assign, id, cand) && (ctx.post)(id, cand) {
                assign[id.dim].push(cand.clone());
                dfs(ctx, k + 1, assign, budget, emit, keep_going)?;
                assign[id.dim].pop();
                if !*keep_going {
                    return Ok(());
                }
            }
        }
        Ok(())
    }

    let ctx = Ctx {
        source,
        target,
        slots,
        fixed,
        pools,
        post,
    };
    let mut assign: Vec<Vec<EzSimplex>> = vec![Vec::new(); top + 1];
    let mut keep_going = true;
    dfs(&ctx, 0, &mut assign, budget, emit, &mut keep_going)
}

#[cfg(test)]
mod tests {
    use super::super::{boundary, point, standard_simplex};
    use super::*;

    fn arc(s: SimplicialSet) -> SSet {
        Arc::new(s)
    }

    #[test]
    fn enumerate_vertex_maps() {
        let p = arc(point());
        let d1 = arc(standard_simplex(1));
        let maps = enumerate_maps(&p, &d1, &mut Budget::default()).unwrap();
        assert_eq!(maps.len(), 2);
    }

    #[test]
    fn maps_from_interval_to_interval() {
        // maps Δ¹ -> Δ¹ are the monotone maps [1] -> [1]: three of them
        let d1 = arc(standard_simplex(1));
        let maps = enumerate_maps(&d1, &d1, &mut Budget::default()).unwrap();
        assert_eq!(maps.len(), 3);
        for m in &maps {
            m.verify().unwrap();
        }
    }

    #[test]
    fn boundary_maps_count() {
        // maps ∂Δ¹ -> Δ¹: pairs of vertices: 4
        let b = arc(boundary(1));
        let d1 = arc(standard_simplex(1));
        let maps = enumerate_maps(&b, &d1, &mut Budget::default()).unwrap();
        assert_eq!(maps.len(), 4);
    }

    #[test]
    fn composition_and_identity() {
        let d2 = arc(standard_simplex(2));
        let id = SimplicialMap::identity(&d2);
        let c = id.compose(&id).unwrap();
        assert_eq!(c, id);
        assert!(id.is_isomorphism());
    }

    #[test]
    fn guard_trips() {
        let d2 = arc(standard_simplex(2));
        let mut tiny = Budget::new(3);
        let err = enumerate_maps(&d2, &d2, &mut tiny).unwrap_err();
        matches!(err, Error::GuardExceeded { .. });
    }
}
