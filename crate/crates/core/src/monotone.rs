//! Weakly monotone maps between finite ordinals `[m] = {0, ..., m}`.
//!
//! These are the simplicial operators: every structure map of a simplicial
//! set is induced by some `MonotoneMap`, and every operator factors uniquely
//! as a surjection followed by an injection. Composition is written
//! `f.compose(&g) = f ∘ g`.

use crate::error::{Error, Result};
use std::fmt;

/// A weakly increasing map `[m] -> [n]`, stored by its value list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonotoneMap {
    target: usize,
    values: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(target: usize, values: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::malformed("monotone map needs a nonempty value list"));
        }
        for w in values.windows(2) {
            if w[0] > w[1] {
                return Err(Error::malformed("monotone map values must be weakly increasing"));
            }
        }
        if *values.last().unwrap() > target {
            return Err(Error::malformed("monotone map value exceeds target arity"));
        }
        Ok(MonotoneMap { target, values })
    }

    /// The identity on `[n]`.
    pub fn identity(n: usize) -> Self {
        MonotoneMap {
            target: n,
            values: (0..=n).collect(),
        }
    }

    /// The coface `δ_i : [n-1] -> [n]` skipping the value `i`.
    pub fn coface(n: usize, i: usize) -> Self {
        debug_assert!(n >= 1 && i <= n);
        MonotoneMap {
            target: n,
            values: (0..n).map(|v| if v < i { v } else { v + 1 }).collect(),
        }
    }

    /// The codegeneracy `σ_i : [n+1] -> [n]` hitting the value `i` twice.
    pub fn codegeneracy(n: usize, i: usize) -> Self {
        debug_assert!(i <= n);
        MonotoneMap {
            target: n,
            values: (0..=n + 1).map(|v| if v <= i { v } else { v - 1 }).collect(),
        }
    }

    /// The constant map `[m] -> [n]` at `v`.
    pub fn constant(m: usize, n: usize, v: usize) -> Self {
        debug_assert!(v <= n);
        MonotoneMap {
            target: n,
            values: vec![v; m + 1],
        }
    }

    /// Source arity `m` (the map is defined on `[m]`).
    pub fn source(&self) -> usize {
        self.values.len() - 1
    }

    /// Target arity `n`.
    pub fn target(&self) -> usize {
        self.target
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    pub fn is_identity(&self) -> bool {
        self.target == self.source() && self.values.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        if self.values[0] != 0 || *self.values.last().unwrap() != self.target {
            return false;
        }
        self.values.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    /// Composite `self ∘ other`, requiring `other.target == self.source()`.
    pub fn compose(&self, other: &MonotoneMap) -> MonotoneMap {
        debug_assert_eq!(other.target, self.source());
        MonotoneMap {
            target: self.target,
            values: other.values.iter().map(|&v| self.values[v]).collect(),
        }
    }

    /// Epi-mono factorisation `self = inj ∘ surj`, with `surj` surjective
    /// onto `[k]` and `inj` injective into the target. The factorisation is
    /// unique and refactoring is idempotent.
    pub fn epi_mono(&self) -> (MonotoneMap, MonotoneMap) {
        let mut image: Vec<usize> = self.values.clone();
        image.dedup();
        let k = image.len() - 1;
        let surj_values: Vec<usize> = self
            .values
            .iter()
            .map(|v| image.binary_search(v).unwrap())
            .collect();
        let surj = MonotoneMap {
            target: k,
            values: surj_values,
        };
        let inj = MonotoneMap {
            target: self.target,
            values: image,
        };
        (surj, inj)
    }

    /// All surjections `[n] ->> [k]`, in lexicographic order of value lists.
    pub fn surjections(n: usize, k: usize) -> Vec<MonotoneMap> {
        if k > n {
            return Vec::new();
        }
        // A surjection is determined by the set of positions i in 1..=n where
        // the value repeats (does not step up); there must be n - k repeats.
        let mut out = Vec::new();
        let repeats = n - k;
        for choice in combinations(n, repeats) {
            // choice: positions (1-based among steps) that repeat
            let mut values = Vec::with_capacity(n + 1);
            let mut v = 0usize;
            values.push(0);
            for step in 1..=n {
                if !choice.contains(&(step - 1)) {
                    v += 1;
                }
                values.push(v);
            }
            out.push(MonotoneMap { target: k, values });
        }
        out.sort();
        out
    }

    /// All injections `[k] -> [n]`, in lexicographic order.
    pub fn injections(k: usize, n: usize) -> Vec<MonotoneMap> {
        if k > n {
            return Vec::new();
        }
        combinations(n + 1, k + 1)
            .into_iter()
            .map(|vals| MonotoneMap {
                target: n,
                values: vals,
            })
            .collect()
    }

    /// All monotone maps `[m] -> [n]`, in lexicographic order.
    pub fn all(m: usize, n: usize) -> Vec<MonotoneMap> {
        let mut out = Vec::new();
        let mut current = vec![0usize; m + 1];
        loop {
            out.push(MonotoneMap {
                target: n,
                values: current.clone(),
            });
            // advance to the next weakly increasing tuple
            let mut i = m + 1;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if current[i] < n {
                    current[i] += 1;
                    for j in i + 1..=m {
                        current[j] = current[i];
                    }
                    break;
                }
            }
        }
    }
}

/// All size-`r` subsets of `{0, ..., n-1}` in lexicographic order.
pub fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if r > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        out.push(idx.clone());
        if r == 0 {
            return out;
        }
        // advance
        let mut i = r;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] + (r - i) <= n - 1 {
                idx[i] += 1;
                for j in i + 1..r {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

impl fmt::Debug for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]->[{}]:{:?}", self.source(), self.target, self.values)
    }
}

impl fmt::Display for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.values {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn epi_mono_factors_and_is_idempotent() {
        let f = MonotoneMap::new(5, vec![1, 1, 3, 3, 3, 4]).unwrap();
        let (s, i) = f.epi_mono();
        assert!(s.is_surjective());
        assert!(i.is_injective());
        assert_eq!(i.compose(&s), f);
        let (s2, i2) = s.epi_mono();
        assert!(i2.is_identity());
        assert_eq!(s2, s);
    }

    #[test]
    fn simplicial_identities_on_operators() {
        // δ_j δ_i = δ_i δ_{j-1} for i < j at the level of cofaces into [3]
        for j in 0..=3usize {
            for i in 0..j {
                let left = MonotoneMap::coface(3, j).compose(&MonotoneMap::coface(2, i));
                let right = MonotoneMap::coface(3, i).compose(&MonotoneMap::coface(2, j - 1));
                assert_eq!(left, right);
            }
        }
        // σ_i δ_i = id
        for i in 0..=2usize {
            let c = MonotoneMap::codegeneracy(2, i).compose(&MonotoneMap::coface(3, i));
            assert!(c.is_identity());
        }
    }

    #[test]
    fn surjection_counts() {
        assert_eq!(MonotoneMap::surjections(3, 1).len(), 3); // C(3,2)
        assert_eq!(MonotoneMap::surjections(4, 2).len(), 6); // C(4,2)
        for s in MonotoneMap::surjections(4, 2) {
            assert!(s.is_surjective());
        }
    }

    #[test]
    fn all_maps_count() {
        // |Hom([1],[1])| = C(4,1)... weakly increasing pairs in {0,1}: 3
        assert_eq!(MonotoneMap::all(1, 1).len(), 3);
        // |Hom([2],[1])| = 4
        assert_eq!(MonotoneMap::all(2, 1).len(), 4);
    }
}
