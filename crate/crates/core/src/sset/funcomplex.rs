//! Function complexes: `FC(X, Y)_n` is the set of simplicial maps
//! `X × Δⁿ -> Y`, materialised level by level up to a dimension cap. `X`
//! must be finite (complete); levels are enumerated under a search guard.

use super::build::simplex_operator_map;
use super::product::{product, product_map, ProductSet};
use super::{
    enumerate_maps, EzSimplex, SSet, SimplexData, SimplexId, SimplicialMap, SimplicialSet,
};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::monotone::MonotoneMap;
use std::sync::Arc;

#[derive(Clone)]
pub struct FunctionComplex {
    pub space: SSet,
    pub dom: SSet,
    pub cod: SSet,
    pub deltas: Vec<SSet>,
    pub products: Vec<ProductSet>,
    codes: Vec<Vec<SimplicialMap>>,
}

impl FunctionComplex {
    /// The operator action on witnesses: `m · op = m ∘ (id × Δ^op)`.
    pub fn act_map(&self, m: &SimplicialMap, dim: usize, op: &MonotoneMap) -> SimplicialMap {
        let k = op.source();
        debug_assert_eq!(op.target(), dim);
        let delta_map = simplex_operator_map(&self.deltas[k], &self.deltas[dim], op)
            .expect("operator map on standard simplices");
        let id = SimplicialMap::identity(&self.dom);
        let pm = product_map(&id, &delta_map, &self.products[k], &self.products[dim])
            .expect("product of identity and operator map");
        m.compose(&pm).expect("function complex operator action")
    }

    /// The witness map `X × Δⁿ -> Y` of an arbitrary `n`-simplex.
    pub fn as_map(&self, ez: &EzSimplex) -> SimplicialMap {
        let base = &self.codes[ez.base.dim][ez.base.index];
        if ez.collapse.is_identity() {
            base.clone()
        } else {
            self.act_map(base, ez.base.dim, &ez.collapse)
        }
    }

    /// Locate the normal form of a witness map at level `n`.
    pub fn find(&self, m: &SimplicialMap, n: usize) -> Option<EzSimplex> {
        let mut current = m.clone();
        let mut d = n;
        let mut collapse = MonotoneMap::identity(n);
        'outer: loop {
            if d == 0 {
                break;
            }
            for i in 0..d {
                let faced = self.act_map(&current, d, &MonotoneMap::coface(d, i));
                let back = self.act_map(&faced, d - 1, &MonotoneMap::codegeneracy(d - 1, i));
                if back == current {
                    current = faced;
                    collapse = MonotoneMap::codegeneracy(d - 1, i).compose(&collapse);
                    d -= 1;
                    continue 'outer;
                }
            }
            break;
        }
        let index = self.codes[d].iter().position(|c| *c == current)?;
        Some(EzSimplex {
            base: SimplexId { dim: d, index },
            collapse,
        })
    }

    /// The canonical identification `FC(Δ⁰, A) -> A` (evaluate at the point).
    pub fn point_iso(&self) -> Result<SimplicialMap> {
        if self.dom.counts() != vec![1] {
            return Err(Error::malformed("point_iso needs domain Δ⁰"));
        }
        SimplicialMap::from_fn(Arc::clone(&self.space), Arc::clone(&self.cod), |id| {
            let m = self.codes[id.dim][id.index].clone();
            let n = id.dim;
            // evaluate at (pt, top simplex of Δⁿ)
            let pt = EzSimplex::nondegenerate(SimplexId { dim: 0, index: 0 });
            let pt_n = EzSimplex {
                base: SimplexId { dim: 0, index: 0 },
                collapse: MonotoneMap::constant(n, 0, 0),
            };
            let top = EzSimplex::nondegenerate(SimplexId {
                dim: n,
                index: 0,
            });
            let _ = pt;
            let arg = self.products[n].encode(&pt_n, &top);
            m.apply(&arg)
        })
    }

    /// Composite of two witnesses at the same level:
    /// `A × Δⁿ --(f,π₂)--> B × Δⁿ --g--> C`.
    pub fn compose_elements(
        &self,
        fc_bc: &FunctionComplex,
        fc_ac: &FunctionComplex,
        f: &EzSimplex,
        g: &EzSimplex,
    ) -> EzSimplex {
        debug_assert_eq!(f.dim(), g.dim());
        let n = f.dim();
        let fm = self.as_map(f);
        let gm = fc_bc.as_map(g);
        let pa = &fc_ac.products[n];
        let pb = &fc_bc.products[n];
        let h = SimplicialMap::from_fn(
            Arc::clone(&pa.space),
            Arc::clone(&fc_ac.cod),
            |id| {
                let (_, t) = pa.decode(&EzSimplex::nondegenerate(id));
                let fx = fm.apply(&EzSimplex::nondegenerate(id));
                gm.apply(&pb.encode(&fx, &t))
            },
        )
        .expect("composition witness is simplicial");
        fc_ac
            .find(&h, n)
            .expect("composite witness must be in the table")
    }
}

/// Materialise `FC(dom, cod)` up to level `cap`.
pub fn function_complex(
    dom: &SSet,
    cod: &SSet,
    cap: usize,
    budget: &mut Budget,
) -> Result<FunctionComplex> {
    if dom.is_truncated() {
        return Err(Error::Hypothesis(
            "function complex domain must be finite (complete)".into(),
        ));
    }
    let mut deltas = Vec::with_capacity(cap + 1);
    let mut products = Vec::with_capacity(cap + 1);
    for n in 0..=cap {
        let d: SSet = Arc::new(super::standard_simplex(n));
        products.push(product(dom, &d));
        deltas.push(d);
    }

    // Enumerate all witnesses per level, then extract normal forms.
    let mut all: Vec<Vec<SimplicialMap>> = Vec::with_capacity(cap + 1);
    for p in products.iter().take(cap + 1) {
        budget.set_context("function complex level");
        all.push(enumerate_maps(&p.space, cod, budget)?);
    }

    let mut fc = FunctionComplex {
        space: Arc::new(SimplicialSet::from_levels(Vec::new(), true)),
        dom: Arc::clone(dom),
        cod: Arc::clone(cod),
        deltas,
        products,
        codes: Vec::new(),
    };

    let mut levels: Vec<Vec<SimplexData>> = Vec::new();
    for (n, maps) in all.into_iter().enumerate() {
        let mut nondeg: Vec<SimplicialMap> = Vec::new();
        'outer: for m in maps {
            for i in 0..n {
                let faced = fc.act_map(&m, n, &MonotoneMap::coface(n, i));
                let back = fc.act_map(&faced, n - 1, &MonotoneMap::codegeneracy(n - 1, i));
                if back == m {
                    continue 'outer;
                }
            }
            nondeg.push(m);
        }
        nondeg.sort_by(|a, b| a.assignment().cmp(b.assignment()));
        fc.codes.push(nondeg);
        let mut level = Vec::with_capacity(fc.codes[n].len());
        for (index, _) in fc.codes[n].iter().enumerate() {
            let faces: Vec<EzSimplex> = if n == 0 {
                Vec::new()
            } else {
                (0..=n)
                    .map(|i| {
                        let faced = fc.act_map(
                            &fc.codes[n][index],
                            n,
                            &MonotoneMap::coface(n, i),
                        );
                        fc.find(&faced, n - 1)
                            .expect("face of a witness is a witness")
                    })
                    .collect()
            };
            level.push(SimplexData {
                name: format!("f{index}"),
                faces,
            });
        }
        levels.push(level);
    }
    fc.space = Arc::new(SimplicialSet::from_levels(levels, true));
    Ok(fc)
}

/// Precomposition `FC(B, Y) -> FC(A, Y)` along `g : A -> B`.
pub fn induced_precompose(
    fc_b: &FunctionComplex,
    fc_a: &FunctionComplex,
    g: &SimplicialMap,
) -> Result<SimplicialMap> {
    if fc_b.cod != fc_a.cod || g.source != fc_a.dom || g.target != fc_b.dom {
        return Err(Error::malformed("induced_precompose boundary mismatch"));
    }
    SimplicialMap::from_fn(
        Arc::clone(&fc_b.space),
        Arc::clone(&fc_a.space),
        |id| {
            let n = id.dim;
            let m = &fc_b.codes[n][id.index];
            let id_delta = SimplicialMap::identity(&fc_a.deltas[n]);
            let pm = product_map(g, &id_delta, &fc_a.products[n], &fc_b.products[n])
                .expect("product of g and identity");
            let composed = m.compose(&pm).expect("precompose witness");
            fc_a.find(&composed, n).expect("witness present")
        },
    )
}

/// Postcomposition `FC(X, Y) -> FC(X, Z)` along `h : Y -> Z`.
pub fn induced_postcompose(
    fc_y: &FunctionComplex,
    fc_z: &FunctionComplex,
    h: &SimplicialMap,
) -> Result<SimplicialMap> {
    if fc_y.dom != fc_z.dom || h.source != fc_y.cod || h.target != fc_z.cod {
        return Err(Error::malformed("induced_postcompose boundary mismatch"));
    }
    SimplicialMap::from_fn(
        Arc::clone(&fc_y.space),
        Arc::clone(&fc_z.space),
        |id| {
            let m = &fc_y.codes[id.dim][id.index];
            let composed = h.compose(m).expect("postcompose witness");
            fc_z.find(&composed, id.dim).expect("witness present")
        },
    )
}

#[cfg(test)]
mod tests {
    use super::super::{boundary, point, standard_simplex};
    use super::*;

    fn arc(s: SimplicialSet) -> SSet {
        Arc::new(s)
    }

    #[test]
    fn interval_self_maps() {
        let d1 = arc(standard_simplex(1));
        let fc = function_complex(&d1, &d1, 1, &mut Budget::default()).unwrap();
        // level 0: the three monotone maps [1] -> [1]
        assert_eq!(fc.space.count(0), 3);
        fc.space.verify_identities().unwrap();
    }

    #[test]
    fn boundary_to_interval_vertices() {
        let b1 = arc(boundary(1));
        let d1 = arc(standard_simplex(1));
        let fc = function_complex(&b1, &d1, 0, &mut Budget::default()).unwrap();
        assert_eq!(fc.space.count(0), 4);
    }

    #[test]
    fn point_exponent_recovers_target() {
        let pt = arc(point());
        let d2 = arc(standard_simplex(2));
        let fc = function_complex(&pt, &d2, 2, &mut Budget::default()).unwrap();
        assert_eq!(fc.space.counts(), d2.counts());
        let iso = fc.point_iso().unwrap();
        assert!(iso.is_isomorphism());
    }

    #[test]
    fn levels_biject_with_product_maps() {
        // FC(X, Y)_n is in bijection with maps X × Δⁿ -> Y (oracle: direct
        // enumeration of maps against the normal-form count).
        let b1 = arc(boundary(1));
        let d1 = arc(standard_simplex(1));
        let fc = function_complex(&b1, &d1, 1, &mut Budget::default()).unwrap();
        let d1_arc = arc(standard_simplex(1));
        let p = product(&b1, &d1_arc);
        let direct = enumerate_maps(&p.space, &d1, &mut Budget::default()).unwrap();
        assert_eq!(fc.space.total_count(1), direct.len());
    }
}
