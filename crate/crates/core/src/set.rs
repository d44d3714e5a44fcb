//! Bit-set over the elements of a finite algebra.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

const WORD: usize = 64;

/// A subset of `0..size`, stored as a little-endian bit pattern.
///
/// Every filter, ideal and subordinate in this crate is an `ElementSet`.
/// Sets compare by the numeric value of their bit pattern (element `i`
/// contributes `2^i`), which is the enumeration order used throughout.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ElementSet {
    size: usize,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(size: usize) -> Self {
        ElementSet { size, words: vec![0; size.div_ceil(WORD)] }
    }

    pub fn full(size: usize) -> Self {
        let mut s = Self::empty(size);
        for i in 0..size {
            s.insert(i);
        }
        s
    }

    pub fn singleton(size: usize, x: usize) -> Self {
        let mut s = Self::empty(size);
        s.insert(x);
        s
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(size: usize, elems: I) -> Self {
        let mut s = Self::empty(size);
        for x in elems {
            s.insert(x);
        }
        s
    }

    pub fn from_predicate(size: usize, mut pred: impl FnMut(usize) -> bool) -> Self {
        let mut s = Self::empty(size);
        for x in 0..size {
            if pred(x) {
                s.insert(x);
            }
        }
        s
    }

    /// Number of elements of the ambient algebra.
    #[inline]
    pub fn universe(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.size && self.words[x / WORD] >> (x % WORD) & 1 == 1
    }

    /// Panics if `x` is outside the universe.
    #[inline]
    pub fn insert(&mut self, x: usize) -> bool {
        assert!(x < self.size, "element {x} out of range for universe of {}", self.size);
        let w = &mut self.words[x / WORD];
        let bit = 1u64 << (x % WORD);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, x: usize) -> bool {
        if x >= self.size {
            return false;
        }
        let w = &mut self.words[x / WORD];
        let bit = 1u64 << (x % WORD);
        let had = *w & bit != 0;
        *w &= !bit;
        had
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.size
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        debug_assert_eq!(self.size, other.size);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
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
        let mut out = ElementSet::full(self.size);
        for (o, w) in out.words.iter_mut().zip(&self.words) {
            *o &= !w;
        }
        out
    }

    fn zip_with(&self, other: &ElementSet, f: impl Fn(u64, u64) -> u64) -> ElementSet {
        debug_assert_eq!(self.size, other.size);
        ElementSet {
            size: self.size,
            words: self.words.iter().zip(&other.words).map(|(&a, &b)| f(a, b)).collect(),
        }
    }

    /// Elements in ascending index order.
    pub fn iter(&self) -> Iter<'_> {
        Iter { set: self, word: 0, bits: self.words.first().copied().unwrap_or(0) }
    }

    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Image of the set under `map`, inside a universe of `size` elements.
    pub fn map(&self, size: usize, map: impl Fn(usize) -> usize) -> ElementSet {
        ElementSet::from_elements(size, self.iter().map(map))
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

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size
            .cmp(&other.size)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
