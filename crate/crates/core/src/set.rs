//! Subsets of a finite carrier `0..n`, stored as a bitset.

use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

const WORD: usize = 64;

/// A subset of `0..carrier_order`.
///
/// Only bits below `carrier_order` are ever set, so two sets over the same
/// carrier compare equal exactly when they have the same members.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ElementSet {
    carrier_order: usize,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(carrier_order: usize) -> Self {
        ElementSet {
            carrier_order,
            words: alloc::vec![0; carrier_order.div_ceil(WORD)],
        }
    }

    pub fn full(carrier_order: usize) -> Self {
        let mut set = Self::empty(carrier_order);
        for x in 0..carrier_order {
            set.insert(x);
        }
        set
    }

    pub fn singleton(carrier_order: usize, x: usize) -> Self {
        let mut set = Self::empty(carrier_order);
        set.insert(x);
        set
    }

    /// Builds a set from an iterator of members.
    ///
    /// Panics if a member is out of range.
    pub fn from_members<I: IntoIterator<Item = usize>>(carrier_order: usize, members: I) -> Self {
        let mut set = Self::empty(carrier_order);
        for x in members {
            set.insert(x);
        }
        set
    }

    #[inline]
    pub fn carrier_order(&self) -> usize {
        self.carrier_order
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.carrier_order && self.words[x / WORD] & (1 << (x % WORD)) != 0
    }

    /// Inserts `x`, returning `true` if it was not already present.
    #[inline]
    pub fn insert(&mut self, x: usize) -> bool {
        assert!(
            x < self.carrier_order,
            "element {x} outside carrier of order {}",
            self.carrier_order
        );
        let mask = 1 << (x % WORD);
        let word = &mut self.words[x / WORD];
        let fresh = *word & mask == 0;
        *word |= mask;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, x: usize) -> bool {
        if x >= self.carrier_order {
            return false;
        }
        let mask = 1 << (x % WORD);
        let word = &mut self.words[x / WORD];
        let present = *word & mask != 0;
        *word &= !mask;
        present
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.carrier_order
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            set: self,
            word: 0,
            bits: self.words.first().copied().unwrap_or(0),
        }
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.check_compatible(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> ElementSet {
        let mut out = self.clone();
        for w in out.words.iter_mut() {
            *w = !*w;
        }
        out.clear_padding();
        out
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        self.check_compatible(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &ElementSet) {
        self.check_compatible(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    /// Image of the set under a map given as a table `map[x]`.
    pub fn image(&self, map: &[usize]) -> ElementSet {
        ElementSet::from_members(self.carrier_order, self.iter().map(|x| map[x]))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn zip_with(&self, other: &ElementSet, f: impl Fn(u64, u64) -> u64) -> ElementSet {
        self.check_compatible(other);
        ElementSet {
            carrier_order: self.carrier_order,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    fn clear_padding(&mut self) {
        let tail = self.carrier_order % WORD;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }

    #[inline]
    fn check_compatible(&self, other: &ElementSet) {
        assert_eq!(
            self.carrier_order, other.carrier_order,
            "element sets over different carriers"
        );
    }
}

pub struct Iter<'a> {
    set: &'a ElementSet,
    word: usize,
    bits: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let tz = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.word * WORD + tz);
            }
            self.word += 1;
            if self.word >= self.set.words.len() {
                return None;
            }
            self.bits = self.set.words[self.word];
        }
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
