//! Bitset-backed vertex sets over a fixed universe `0..n`.
//!
//! Every counting kernel in the crate reduces to word-wise AND + popcount on
//! these sets, so the representation is a plain `Vec<u64>` with the universe
//! size and cardinality cached.

/// A subset of the vertex universe `0..n`, stored as a bitset.
///
/// The cached cardinality always equals the popcount of the words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexSet {
    n: usize,
    card: usize,
    words: Vec<u64>,
}

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Popcount of `a AND b` over equal-length slices.
#[inline]
pub(crate) fn and_popcount(a: &[u64], b: &[u64]) -> usize {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones() as usize)
        .sum()
}

impl VertexSet {
    /// Empty set over universe `0..n`.
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            card: 0,
            words: vec![0; words_for(n)],
        }
    }

    /// Full set `{0, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut words = vec![!0u64; words_for(n)];
        if !n.is_multiple_of(64) {
            if let Some(last) = words.last_mut() {
                *last = (1u64 << (n % 64)) - 1;
            }
        }
        if n == 0 {
            words.clear();
        }
        VertexSet { n, card: n, words }
    }

    /// Set containing the given vertices. Panics on out-of-range indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, indices: I) -> Self {
        let mut s = VertexSet::empty(n);
        for v in indices {
            s.insert(v);
        }
        s
    }

    /// Contiguous range `lo..hi` as a set.
    pub fn from_range(n: usize, range: std::ops::Range<usize>) -> Self {
        VertexSet::from_indices(n, range)
    }

    /// Builds a set directly from backing words (extra bits must be clear).
    pub(crate) fn from_words(n: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), words_for(n));
        let card = words.iter().map(|w| w.count_ones() as usize).sum();
        VertexSet { n, card, words }
    }

    /// Universe size (not the cardinality).
    pub fn universe(&self) -> usize {
        self.n
    }

    /// Number of elements.
    pub fn card(&self) -> usize {
        self.card
    }

    pub fn is_empty(&self) -> bool {
        self.card == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    /// Inserts `v`; returns true if it was absent. Panics if `v >= n`.
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.n, "vertex {v} outside universe 0..{}", self.n);
        let w = &mut self.words[v / 64];
        let bit = 1u64 << (v % 64);
        if *w & bit == 0 {
            *w |= bit;
            self.card += 1;
            true
        } else {
            false
        }
    }

    /// Removes `v`; returns true if it was present.
    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.n {
            return false;
        }
        let w = &mut self.words[v / 64];
        let bit = 1u64 << (v % 64);
        if *w & bit != 0 {
            *w &= !bit;
            self.card -= 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.n, other.n);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        VertexSet::from_words(self.n, words)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.n, other.n);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        VertexSet::from_words(self.n, words)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.n, other.n);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & !b)
            .collect();
        VertexSet::from_words(self.n, words)
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet::full(self.n).difference(self)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Ascending iterator over the elements.
    pub fn iter(&self) -> SetIter<'_> {
        SetIter {
            words: &self.words,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    /// Elements collected in ascending order.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct SetIter<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for SetIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * 64 + bit)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = SetIter<'a>;

    fn into_iter(self) -> SetIter<'a> {
        self.iter()
    }
}
