use std::fmt;

use fixedbitset::FixedBitSet;

use crate::Element;

/// A subset of the elements of one semigroup, stored as a bitset over `0..order`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    bits: FixedBitSet,
}

impl ElementSet {
    pub fn empty(order: usize) -> Self {
        ElementSet {
            bits: FixedBitSet::with_capacity(order),
        }
    }

    pub fn full(order: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(order);
        bits.insert_range(..);
        ElementSet { bits }
    }

    /// Panics if any element is `>= order`.
    pub fn from_elements<I: IntoIterator<Item = Element>>(order: usize, elements: I) -> Self {
        let mut set = Self::empty(order);
        for x in elements {
            set.insert(x);
        }
        set
    }

    /// Size of the ambient semigroup.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, x: Element) -> bool {
        self.bits.contains(x)
    }

    /// Returns true if `x` was not already present.
    pub fn insert(&mut self, x: Element) -> bool {
        assert!(
            x < self.bits.len(),
            "element {x} outside universe of size {}",
            self.bits.len()
        );
        !self.bits.put(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.bits.ones()
    }

    pub fn min(&self) -> Option<Element> {
        self.bits.minimum()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn to_vec(&self) -> Vec<Element> {
        self.iter().collect()
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
