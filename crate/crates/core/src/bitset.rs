//! Fixed-width vertex bitsets.
//!
//! Every graph in this crate has at most [`MAX_VERTICES`] vertices, so a set of
//! vertices fits in four machine words and can be copied freely. All hot loops
//! (neighbourhood intersection, forbidden-vertex masks) work on these words.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

const WORDS: usize = 4;

/// Largest vertex count supported by [`VertexSet`] and therefore by every graph.
pub const MAX_VERTICES: usize = WORDS * 64;

/// A set of vertex indices in `0..MAX_VERTICES`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet { words: [0; WORDS] };

    pub const fn new() -> Self {
        Self::EMPTY
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds {MAX_VERTICES}");
        let mut s = Self::EMPTY;
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * 64;
            if n >= lo + 64 {
                *w = u64::MAX;
            } else if n > lo {
                *w = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::EMPTY;
        s.insert(v);
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        debug_assert!(v < MAX_VERTICES);
        let (w, b) = (v >> 6, v & 63);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !was
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        debug_assert!(v < MAX_VERTICES);
        let (w, b) = (v >> 6, v & 63);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] &= !(1 << b);
        was
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < MAX_VERTICES && self.words[v >> 6] >> (v & 63) & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn union(&self, other: &Self) -> Self {
        let mut words = self.words;
        for (w, o) in words.iter_mut().zip(other.words) {
            *w |= o;
        }
        Self { words }
    }

    #[inline]
    pub fn intersection(&self, other: &Self) -> Self {
        let mut words = self.words;
        for (w, o) in words.iter_mut().zip(other.words) {
            *w &= o;
        }
        Self { words }
    }

    #[inline]
    pub fn difference(&self, other: &Self) -> Self {
        let mut words = self.words;
        for (w, o) in words.iter_mut().zip(other.words) {
            *w &= !o;
        }
        Self { words }
    }

    #[inline]
    pub fn intersects(&self, other: &Self) -> bool {
        self.words.iter().zip(other.words).any(|(a, b)| a & b != 0)
    }

    #[inline]
    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().zip(other.words).all(|(a, b)| a & !b == 0)
    }

    /// Smallest element, if any.
    #[inline]
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Largest element, if any.
    pub fn last(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
    }

    /// Elements strictly greater than `v`.
    pub fn above(&self, v: usize) -> Self {
        self.difference(&Self::full((v + 1).min(MAX_VERTICES)))
    }

    /// One past the largest element (0 for the empty set).
    pub fn bound(&self) -> usize {
        self.last().map_or(0, |v| v + 1)
    }

    pub fn iter(&self) -> Iter {
        Iter {
            words: self.words,
            index: 0,
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// The `k` smallest elements (or all of them if there are fewer).
    pub fn take(&self, k: usize) -> Self {
        self.iter().take(k).collect()
    }
}

pub struct Iter {
    words: [u64; WORDS],
    index: usize,
}

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.index < WORDS {
            let w = &mut self.words[self.index];
            if *w != 0 {
                let b = w.trailing_zeros() as usize;
                *w &= *w - 1;
                return Some(self.index * 64 + b);
            }
            self.index += 1;
        }
        None
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl Extend<usize> for VertexSet {
    fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
        for v in iter {
            self.insert(v);
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on the sorted element lists.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let items = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&v) = items.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!(
                "vertex {v} exceeds the supported maximum of {MAX_VERTICES}"
            )));
        }
        Ok(items.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_bounds() {
        assert_eq!(VertexSet::full(0).len(), 0);
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::full(65).last(), Some(64));
        assert_eq!(VertexSet::full(MAX_VERTICES).len(), MAX_VERTICES);
        assert_eq!(VertexSet::full(10).above(4).to_vec(), vec![5, 6, 7, 8, 9]);
        assert_eq!(VertexSet::full(3).above(255), VertexSet::EMPTY);
    }

    #[test]
    fn display_is_braced_list() {
        let s: VertexSet = [3, 0, 130].into_iter().collect();
        assert_eq!(s.to_string(), "{0,3,130}");
        assert_eq!(s.first(), Some(0));
        assert_eq!(s.last(), Some(130));
    }

    proptest! {
        #[test]
        fn set_ops_match_btreeset(
            a in proptest::collection::btree_set(0usize..MAX_VERTICES, 0..40),
            b in proptest::collection::btree_set(0usize..MAX_VERTICES, 0..40),
        ) {
            let sa: VertexSet = a.iter().copied().collect();
            let sb: VertexSet = b.iter().copied().collect();
            prop_assert_eq!(sa.len(), a.len());
            prop_assert_eq!(sa.union(&sb).to_vec(), a.union(&b).copied().collect::<Vec<_>>());
            prop_assert_eq!(sa.intersection(&sb).to_vec(), a.intersection(&b).copied().collect::<Vec<_>>());
            prop_assert_eq!(sa.difference(&sb).to_vec(), a.difference(&b).copied().collect::<Vec<_>>());
            prop_assert_eq!(sa.is_subset(&sb), a.is_subset(&b));
            prop_assert_eq!(sa.cmp(&sb), a.iter().cmp(b.iter()));
        }
    }
}
