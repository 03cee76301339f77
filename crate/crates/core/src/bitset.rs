//! Vertex sets as bit masks.
//!
//! Graphs up to 64 vertices fit in a single inline word (no heap traffic in
//! solver inner loops); larger graphs spill to additional words behind the
//! same interface. Binary operations require operands of equal word width,
//! which the [`crate::graph::Graph`] constructors guarantee.

use smallvec::SmallVec;
use std::fmt;

const WORD_BITS: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: SmallVec<[u64; 1]>,
}

/// Number of words needed for `capacity` vertices; always at least one.
fn word_count(capacity: usize) -> usize {
    capacity.div_ceil(WORD_BITS).max(1)
}

impl VertexSet {
    /// Empty set able to hold vertices `0..capacity`.
    pub fn empty(capacity: usize) -> Self {
        VertexSet {
            words: SmallVec::from_elem(0, word_count(capacity)),
        }
    }

    /// Set containing exactly `0..n`, with capacity `n`.
    pub fn full(n: usize) -> Self {
        let mut s = VertexSet::empty(n);
        for w in 0..n / WORD_BITS {
            s.words[w] = u64::MAX;
        }
        if n % WORD_BITS != 0 {
            s.words[n / WORD_BITS] = (1u64 << (n % WORD_BITS)) - 1;
        }
        s
    }

    pub fn from_indices(capacity: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = VertexSet::empty(capacity);
        for v in indices {
            s.insert(v);
        }
        s
    }

    /// Same contents, re-sized to hold vertices `0..capacity`. Shrinking must
    /// not drop set bits; enforced in debug builds.
    pub fn resized(&self, capacity: usize) -> Self {
        let mut s = VertexSet::empty(capacity);
        let keep = s.words.len().min(self.words.len());
        s.words[..keep].copy_from_slice(&self.words[..keep]);
        debug_assert!(self.words[keep..].iter().all(|&w| w == 0));
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v / WORD_BITS < self.words.len());
        self.words[v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v / WORD_BITS < self.words.len());
        self.words[v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        match self.words.get(v / WORD_BITS) {
            Some(w) => w >> (v % WORD_BITS) & 1 == 1,
            None => false,
        }
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Lowest set index, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.words.len(), other.words.len());
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.words.len(), other.words.len());
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn subtract(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.words.len(), other.words.len());
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.subtract(other);
        s
    }

    #[inline]
    pub fn intersection_count(&self, other: &VertexSet) -> usize {
        debug_assert_eq!(self.words.len(), other.words.len());
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.words.len(), other.words.len());
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            set: self,
            word_idx: 0,
            current: self.words[0],
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct Iter<'a> {
    set: &'a VertexSet,
    word_idx: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.set.words.len() {
                return None;
            }
            self.current = self.set.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * WORD_BITS + bit)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
