//! Finite categories and their nerves. Nerves of categories are
//! 2-coskeletal, so lazy levels are computed from the composition table;
//! infinite-dimensional nerves (groupoids with nontrivial isomorphisms) are
//! truncated at the requested cap.

use super::{build_rule, SimplexRule, SimplicialSet};
use crate::error::{Error, Result};
use crate::monotone::MonotoneMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub dom: usize,
    pub cod: usize,
}

/// A finite category presented by its full composition table. Arrows
/// include the identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCategory {
    pub objects: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub identity: Vec<usize>,
    /// `compose[g][f] = g ∘ f` when `cod f = dom g`.
    compose: Vec<Vec<Option<usize>>>,
}

impl FiniteCategory {
    pub fn new(
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        identity: Vec<usize>,
        compose: Vec<Vec<Option<usize>>>,
    ) -> Result<Self> {
        let cat = FiniteCategory {
            objects,
            arrows,
            identity,
            compose,
        };
        cat.validate()?;
        Ok(cat)
    }

    fn validate(&self) -> Result<()> {
        let n = self.arrows.len();
        if self.identity.len() != self.objects.len() {
            return Err(Error::malformed("one identity per object required"));
        }
        for (o, &i) in self.identity.iter().enumerate() {
            if self.arrows[i].dom != o || self.arrows[i].cod != o {
                return Err(Error::malformed("identity endpoints wrong"));
            }
        }
        if self.compose.len() != n || self.compose.iter().any(|row| row.len() != n) {
            return Err(Error::malformed("composition table has wrong shape"));
        }
        for g in 0..n {
            for f in 0..n {
                let defined = self.arrows[f].cod == self.arrows[g].dom;
                match self.compose[g][f] {
                    Some(gf) => {
                        if !defined {
                            return Err(Error::malformed("composite of non-composable pair"));
                        }
                        if self.arrows[gf].dom != self.arrows[f].dom
                            || self.arrows[gf].cod != self.arrows[g].cod
                        {
                            return Err(Error::malformed("composite endpoints wrong"));
                        }
                    }
                    None => {
                        if defined {
                            return Err(Error::malformed("missing composite"));
                        }
                    }
                }
            }
        }
        // unit laws
        for f in 0..n {
            let a = self.arrows[f].dom;
            let b = self.arrows[f].cod;
            if self.compose[f][self.identity[a]] != Some(f)
                || self.compose[self.identity[b]][f] != Some(f)
            {
                return Err(Error::malformed("unit law fails"));
            }
        }
        // associativity
        for f in 0..n {
            for g in 0..n {
                if self.arrows[f].cod != self.arrows[g].dom {
                    continue;
                }
                for h in 0..n {
                    if self.arrows[g].cod != self.arrows[h].dom {
                        continue;
                    }
                    let left = self.compose[h][self.compose[g][f].unwrap()];
                    let right = self.compose[self.compose[h][g].unwrap()][f];
                    if left != right {
                        return Err(Error::malformed("associativity fails"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn compose_arrows(&self, g: usize, f: usize) -> Option<usize> {
        self.compose[g][f]
    }

    pub fn is_identity_arrow(&self, f: usize) -> bool {
        self.identity[self.arrows[f].dom] == f && self.arrows[f].dom == self.arrows[f].cod
    }

    /// The discrete category on `n` objects.
    pub fn discrete(n: usize) -> FiniteCategory {
        let objects = (0..n).map(|i| format!("o{i}")).collect();
        let arrows = (0..n)
            .map(|i| Arrow {
                name: format!("id{i}"),
                dom: i,
                cod: i,
            })
            .collect();
        let identity = (0..n).collect();
        let compose = (0..n)
            .map(|g| (0..n).map(|f| if f == g { Some(f) } else { None }).collect())
            .collect();
        FiniteCategory::new(objects, arrows, identity, compose).unwrap()
    }

    /// The poset category of a chain `0 < 1 < ... < n`.
    pub fn chain(n: usize) -> FiniteCategory {
        let objects = (0..=n).map(|i| i.to_string()).collect();
        let mut arrows = Vec::new();
        let mut index = vec![vec![None; n + 1]; n + 1];
        for a in 0..=n {
            for b in a..=n {
                index[a][b] = Some(arrows.len());
                arrows.push(Arrow {
                    name: format!("{a}to{b}"),
                    dom: a,
                    cod: b,
                });
            }
        }
        let identity: Vec<usize> = (0..=n).map(|a| index[a][a].unwrap()).collect();
        let m = arrows.len();
        let mut compose = vec![vec![None; m]; m];
        for (g, ag) in arrows.iter().enumerate() {
            for (f, af) in arrows.iter().enumerate() {
                if af.cod == ag.dom {
                    compose[g][f] = index[af.dom][ag.cod];
                }
            }
        }
        FiniteCategory::new(objects, arrows, identity, compose).unwrap()
    }

    /// A one-object category from a finite monoid multiplication table
    /// (`table[g][f] = g ∘ f`, element 0 the unit).
    pub fn monoid(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<FiniteCategory> {
        let n = names.len();
        let arrows = names
            .into_iter()
            .map(|name| Arrow {
                name,
                dom: 0,
                cod: 0,
            })
            .collect();
        let compose = (0..n)
            .map(|g| (0..n).map(|f| Some(table[g][f])).collect())
            .collect();
        FiniteCategory::new(vec!["*".to_string()], arrows, vec![0], compose)
    }

    /// The cyclic group of order two as a one-object groupoid.
    pub fn z2() -> FiniteCategory {
        FiniteCategory::monoid(
            vec!["e".into(), "g".into()],
            vec![vec![0, 1], vec![1, 0]],
        )
        .unwrap()
    }

    /// The contractible groupoid on `n` objects (exactly one arrow between
    /// any ordered pair).
    pub fn contractible_groupoid(n: usize) -> FiniteCategory {
        let objects = (0..n).map(|i| format!("o{i}")).collect();
        let mut arrows = Vec::new();
        let mut index = vec![vec![0usize; n]; n];
        for a in 0..n {
            for b in 0..n {
                index[a][b] = arrows.len();
                arrows.push(Arrow {
                    name: format!("a{a}{b}"),
                    dom: a,
                    cod: b,
                });
            }
        }
        let identity: Vec<usize> = (0..n).map(|a| index[a][a]).collect();
        let m = arrows.len();
        let mut compose = vec![vec![None; m]; m];
        for (g, ag) in arrows.iter().enumerate() {
            for (f, af) in arrows.iter().enumerate() {
                if af.cod == ag.dom {
                    compose[g][f] = Some(index[af.dom][ag.cod]);
                }
            }
        }
        FiniteCategory::new(objects, arrows, identity, compose).unwrap()
    }

    /// Chains of `len` composable non-identity arrows starting anywhere.
    fn nonid_chains(&self, len: usize) -> Vec<(usize, Vec<usize>)> {
        if len == 0 {
            return (0..self.objects.len()).map(|o| (o, Vec::new())).collect();
        }
        let mut out = Vec::new();
        let mut stack: Vec<Vec<usize>> = self
            .arrows
            .iter()
            .enumerate()
            .filter(|(i, _)| !self.is_identity_arrow(*i))
            .map(|(i, _)| vec![i])
            .collect();
        while let Some(chain) = stack.pop() {
            if chain.len() == len {
                out.push((self.arrows[chain[0]].dom, chain));
                continue;
            }
            let last = *chain.last().unwrap();
            for (i, a) in self.arrows.iter().enumerate() {
                if self.is_identity_arrow(i) || a.dom != self.arrows[last].cod {
                    continue;
                }
                let mut c = chain.clone();
                c.push(i);
                stack.push(c);
            }
        }
        out.sort();
        out
    }
}

/// Nerve rule: a code is a start object plus a chain of arrow indices.
struct NerveRule<'a> {
    cat: &'a FiniteCategory,
}

impl SimplexRule for NerveRule<'_> {
    type Code = (usize, Vec<usize>);

    fn vertices(&self) -> Vec<(Self::Code, String)> {
        (0..self.cat.objects.len())
            .map(|o| ((o, Vec::new()), self.cat.objects[o].clone()))
            .collect()
    }

    fn candidates(&self, n: usize) -> Vec<Self::Code> {
        self.cat.nonid_chains(n)
    }

    fn act(&self, code: &Self::Code, dim: usize, op: &MonotoneMap) -> Self::Code {
        let (start, chain) = code;
        // objects along the chain
        let mut objs = Vec::with_capacity(dim + 1);
        objs.push(*start);
        for &a in chain {
            objs.push(self.cat.arrows[a].cod);
        }
        let m = op.source();
        let new_start = objs[op.apply(0)];
        let mut new_chain = Vec::with_capacity(m);
        for j in 1..=m {
            let lo = op.apply(j - 1);
            let hi = op.apply(j);
            // composite of chain[lo..hi], identity if empty
            let mut acc = self.cat.identity[objs[lo]];
            for k in lo..hi {
                acc = self.cat.compose_arrows(chain[k], acc).unwrap();
            }
            new_chain.push(acc);
        }
        (new_start, new_chain)
    }

    fn name(&self, code: &Self::Code, _dim: usize) -> String {
        let (start, chain) = code;
        if chain.is_empty() {
            self.cat.objects[*start].clone()
        } else {
            chain
                .iter()
                .map(|&a| self.cat.arrows[a].name.clone())
                .collect::<Vec<_>>()
                .join(";")
        }
    }
}

/// The nerve of a finite category, materialised up to `cap`.
pub fn nerve(cat: &FiniteCategory, cap: usize) -> SimplicialSet {
    let rule = NerveRule { cat };
    // Downward closure: if no nondegenerate chains exist at some level, none
    // exist above it; probe one level past the cap to set the flag honestly.
    let truncated = !cat.nonid_chains(cap + 1).is_empty();
    build_rule(&rule, cap, truncated).0
}

/// Codiscrete rule: simplices are arbitrary vertex tuples.
struct CodiscreteRule {
    k: usize,
}

impl SimplexRule for CodiscreteRule {
    type Code = Vec<usize>;

    fn vertices(&self) -> Vec<(Self::Code, String)> {
        (0..self.k).map(|v| (vec![v], format!("c{v}"))).collect()
    }

    fn candidates(&self, n: usize) -> Vec<Self::Code> {
        // tuples with no adjacent repeats (the nondegenerate ones)
        let mut out: Vec<Vec<usize>> = (0..self.k).map(|v| vec![v]).collect();
        for _ in 0..n {
            let mut next = Vec::new();
            for t in &out {
                let last = *t.last().unwrap();
                for v in 0..self.k {
                    if v != last {
                        let mut t2 = t.clone();
                        t2.push(v);
                        next.push(t2);
                    }
                }
            }
            out = next;
        }
        out
    }

    fn act(&self, code: &Self::Code, _dim: usize, op: &MonotoneMap) -> Self::Code {
        op.values().iter().map(|&i| code[i]).collect()
    }

    fn name(&self, code: &Self::Code, _dim: usize) -> String {
        format!(
            "c{}",
            code.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join("-")
        )
    }
}

/// The codiscrete simplicial set on `k` vertices (every vertex tuple spans a
/// unique simplex); for `k = 2` this is the walking isomorphism.
pub fn codiscrete(k: usize, cap: usize) -> SimplicialSet {
    let rule = CodiscreteRule { k };
    build_rule(&rule, cap, k >= 2).0
}

/// The walking isomorphism, truncated at `cap`.
pub fn walking_iso(cap: usize) -> SimplicialSet {
    codiscrete(2, cap)
}

#[cfg(test)]
mod tests {
    use super::super::{is_isomorphic, standard_simplex};
    use super::*;
    use crate::budget::Budget;
    use std::sync::Arc;

    #[test]
    fn nerve_of_chain_is_simplex() {
        let c = FiniteCategory::chain(2);
        let n = nerve(&c, 4);
        assert!(!n.is_truncated());
        let d2 = Arc::new(standard_simplex(2));
        let n = Arc::new(n);
        assert!(is_isomorphic(&n, &d2, &mut Budget::default())
            .unwrap()
            .is_some());
    }

    #[test]
    fn nerve_of_group_grows_forever() {
        let z2 = FiniteCategory::z2();
        let n = nerve(&z2, 3);
        assert!(n.is_truncated());
        assert_eq!(n.counts(), vec![1, 1, 1, 1]);
        n.verify_identities().unwrap();
    }

    #[test]
    fn codiscrete_matches_contractible_groupoid_nerve() {
        let e2 = codiscrete(2, 3);
        let g = FiniteCategory::contractible_groupoid(2);
        let n = Arc::new(nerve(&g, 3));
        let e2 = Arc::new(e2);
        assert_eq!(e2.counts(), n.counts());
        assert!(is_isomorphic(&e2, &n, &mut Budget::default())
            .unwrap()
            .is_some());
    }

    #[test]
    fn discrete_nerve_is_vertices() {
        let d = FiniteCategory::discrete(3);
        let n = nerve(&d, 2);
        assert_eq!(n.counts(), vec![3]);
        assert!(!n.is_truncated());
    }
}
