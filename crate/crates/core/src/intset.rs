//! Finite sets of non-negative integers and their sumsets.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A non-empty finite set of non-negative integers, the label of a vertex or
/// edge. Elements are kept sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntSet(Vec<u64>);

impl IntSet {
    /// Builds a set from arbitrary elements; returns `None` when empty.
    pub fn new(elements: impl IntoIterator<Item = u64>) -> Option<Self> {
        let mut v: Vec<u64> = elements.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if v.is_empty() {
            None
        } else {
            Some(IntSet(v))
        }
    }

    pub fn singleton(x: u64) -> Self {
        IntSet(vec![x])
    }

    /// The contiguous block `{start, start+1, .., start+len-1}`.
    pub fn block(start: u64, len: usize) -> Self {
        assert!(len >= 1);
        IntSet((0..len as u64).map(|i| start + i).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false // non-empty by construction
    }

    pub fn is_singleton(&self) -> bool {
        self.0.len() == 1
    }

    pub fn min(&self) -> u64 {
        self.0[0]
    }

    pub fn elements(&self) -> &[u64] {
        &self.0
    }

    pub fn contains(&self, x: u64) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    /// The sumset `{a + b : a in self, b in other}`.
    pub fn sumset(&self, other: &IntSet) -> IntSet {
        let mut sums: Vec<u64> = Vec::with_capacity(self.len() * other.len());
        for &a in &self.0 {
            for &b in &other.0 {
                sums.push(a + b);
            }
        }
        sums.sort_unstable();
        sums.dedup();
        IntSet(sums)
    }
}

impl fmt::Display for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// First `count` terms of the greedily built Sidon sequence starting at 1
/// (the Mian-Chowla sequence 1, 2, 4, 8, 13, 21, ...). All pairwise sums of
/// distinct terms are distinct, so singleton labels drawn from it give
/// injective edge labels on mono-mono edges.
pub fn mian_chowla(count: usize) -> Vec<u64> {
    let mut terms: Vec<u64> = Vec::with_capacity(count);
    let mut pair_sums = std::collections::BTreeSet::new();
    let mut candidate = 1u64;
    while terms.len() < count {
        let fresh: Vec<u64> = terms
            .iter()
            .map(|&a| a + candidate)
            .chain(std::iter::once(candidate * 2))
            .collect();
        let mut distinct = fresh.iter().all(|s| !pair_sums.contains(s));
        if distinct {
            let as_set: std::collections::BTreeSet<_> = fresh.iter().collect();
            distinct = as_set.len() == fresh.len();
        }
        if distinct {
            pair_sums.extend(fresh);
            terms.push(candidate);
        }
        candidate += 1;
    }
    terms
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sumset_identity_element() {
        let a = IntSet::singleton(0);
        let b = IntSet::new([3, 7]).unwrap();
        assert_eq!(a.sumset(&b), b);
    }

    #[test]
    fn sumset_with_collisions() {
        let a = IntSet::new([1, 2]).unwrap();
        assert_eq!(a.sumset(&a), IntSet::new([2, 3, 4]).unwrap());
    }

    #[test]
    fn sumset_full_size() {
        // direct enumeration: 1+2, 1+8, 3+2, 3+8 are pairwise distinct
        let a = IntSet::new([1, 3]).unwrap();
        let b = IntSet::new([2, 8]).unwrap();
        let s = a.sumset(&b);
        assert_eq!(s, IntSet::new([3, 5, 9, 11]).unwrap());
        assert_eq!(s.len(), a.len() * b.len());
    }

    #[test]
    fn mian_chowla_prefix() {
        assert_eq!(mian_chowla(8), vec![1, 2, 4, 8, 13, 21, 31, 45]);
    }

    #[test]
    fn mian_chowla_pair_sums_distinct() {
        let terms = mian_chowla(20);
        let mut sums = std::collections::BTreeSet::new();
        for (i, &a) in terms.iter().enumerate() {
            for &b in &terms[i..] {
                assert!(sums.insert(a + b), "duplicate pair sum {}", a + b);
            }
        }
    }

    #[test]
    fn cardinality_bounds_exhaustive_small() {
        // max(|A|,|B|) <= |A+B| <= |A||B| over all non-empty subsets of {0..7}
        let universe = 8u64;
        for ma in 1u64..(1 << universe) {
            let a = IntSet::new((0..universe).filter(|i| ma & (1 << i) != 0)).unwrap();
            for mb in 1u64..(1 << universe) {
                let b = IntSet::new((0..universe).filter(|i| mb & (1 << i) != 0)).unwrap();
                let s = a.sumset(&b);
                assert!(s.len() >= a.len().max(b.len()));
                assert!(s.len() <= a.len() * b.len());
            }
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn intset() -> impl Strategy<Value = IntSet> {
            proptest::collection::btree_set(0u64..100, 1..=8)
                .prop_map(|s| IntSet::new(s).unwrap())
        }

        proptest! {
            #[test]
            fn sumset_cardinality_bounds(a in intset(), b in intset()) {
                let s = a.sumset(&b);
                prop_assert!(s.len() >= a.len().max(b.len()));
                prop_assert!(s.len() <= a.len() * b.len());
                if s.len() == a.len().max(b.len()) {
                    prop_assert_eq!(a.len().min(b.len()), 1);
                }
            }

            #[test]
            fn sumset_is_commutative(a in intset(), b in intset()) {
                prop_assert_eq!(a.sumset(&b), b.sumset(&a));
            }
        }
    }
}
