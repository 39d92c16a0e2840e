//! Bitmask subsets of a finite carrier.

use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::ElementIndex;

/// A subset of `0..universe`, stored as a bitmask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSubset {
    bits: FixedBitSet,
}

impl ElementSubset {
    pub fn empty(universe: usize) -> Self {
        ElementSubset {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        ElementSubset { bits }
    }

    pub fn singleton(universe: usize, x: ElementIndex) -> Self {
        let mut s = Self::empty(universe);
        s.insert(x);
        s
    }

    pub fn from_elements<I: IntoIterator<Item = ElementIndex>>(universe: usize, items: I) -> Self {
        let mut s = Self::empty(universe);
        for x in items {
            s.insert(x);
        }
        s
    }

    /// Size of the carrier this subset lives in.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, x: ElementIndex) -> bool {
        self.bits.contains(x)
    }

    /// Inserts `x`, returning `true` when it was not already present.
    pub fn insert(&mut self, x: ElementIndex) -> bool {
        assert!(x < self.universe(), "element {x} outside universe {}", self.universe());
        !self.bits.put(x)
    }

    pub fn remove(&mut self, x: ElementIndex) {
        self.bits.set(x, false);
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementIndex> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<ElementIndex> {
        self.iter().collect()
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        ElementSubset { bits }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        ElementSubset { bits }
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        ElementSubset { bits }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits.is_subset(&other.bits)
    }

    /// Orders by size first, then by the bitmask read as a binary integer.
    pub fn cmp_canonical(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.cmp_bitmask(other))
    }

    fn cmp_bitmask(&self, other: &Self) -> Ordering {
        let a = self.bits.as_slice();
        let b = other.bits.as_slice();
        let n = a.len().max(b.len());
        for i in (0..n).rev() {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            match x.cmp(&y) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }
}

impl fmt::Debug for ElementSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_size_then_mask() {
        let a = ElementSubset::from_elements(70, [0, 65]);
        let b = ElementSubset::from_elements(70, [1, 2, 3]);
        let c = ElementSubset::from_elements(70, [1, 64]);
        assert_eq!(a.cmp_canonical(&b), Ordering::Less);
        assert_eq!(c.cmp_canonical(&a), Ordering::Less);
        assert_eq!(a.cmp_canonical(&a.clone()), Ordering::Equal);
    }

    #[test]
    fn set_algebra() {
        let a = ElementSubset::from_elements(10, [1, 2, 3]);
        let b = ElementSubset::from_elements(10, [3, 4]);
        assert_eq!(a.union(&b).to_vec(), vec![1, 2, 3, 4]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3]);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 2]);
        assert!(!a.is_subset(&b));
        assert!(ElementSubset::empty(10).is_subset(&b));
        assert_eq!(ElementSubset::full(10).len(), 10);
    }
}
