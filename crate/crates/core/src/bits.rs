//! Word-sized vertex sets.
//!
//! Every graph and complex in this crate lives on at most [`MAX_VERTICES`]
//! labelled vertices, so a face is a single `u64` and set algebra is a
//! handful of instructions.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest vertex count supported by graphs and complexes.
pub const MAX_VERTICES: usize = 63;

/// A set of vertices drawn from `0..MAX_VERTICES`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < 64);
        VertexSet(1u64 << v)
    }

    /// The set `{0, 1, ..., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    #[inline]
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Relabels vertices by a map of old label to new label.
    pub fn map(self, relabel: impl Fn(usize) -> usize) -> Self {
        self.iter().map(relabel).collect()
    }

    /// Keeps the vertices of `self` that lie in `support` and renumbers them
    /// by their rank inside `support`.
    pub fn compress(self, support: VertexSet) -> Self {
        let mut out = 0u64;
        let mut rank = 0;
        for v in support.iter() {
            if self.contains(v) {
                out |= 1u64 << rank;
            }
            rank += 1;
        }
        VertexSet(out)
    }

    /// Cyclic shift `v -> v + r mod n` of a set inside `0..n`.
    #[inline]
    pub fn rotate(self, r: usize, n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES && r < n.max(1));
        if r == 0 {
            return self;
        }
        let mask = (1u64 << n) - 1;
        VertexSet(((self.0 << r) | (self.0 >> (n - r))) & mask)
    }

    /// Lexicographic comparison of the sorted vertex lists.
    #[inline]
    pub fn lex_cmp(self, other: Self) -> Ordering {
        let x = self.0 ^ other.0;
        if x == 0 {
            return Ordering::Equal;
        }
        let p = x.trailing_zeros();
        let above = |s: u64| if p == 63 { 0 } else { s >> (p + 1) };
        if self.0 >> p & 1 == 1 {
            // `other` lacks p: it is a prefix of `self` iff nothing follows.
            if above(other.0) == 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else if above(self.0) == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
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
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
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
        let raw = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&v) = raw.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!(
                "vertex {v} exceeds the supported maximum {}",
                MAX_VERTICES - 1
            )));
        }
        Ok(raw.into_iter().collect())
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rotate_wraps() {
        let s: VertexSet = [0, 3].into_iter().collect();
        assert_eq!(s.rotate(2, 4).to_vec(), vec![1, 2]);
        assert_eq!(s.rotate(1, 5).to_vec(), vec![1, 4]);
    }

    #[test]
    fn compress_ranks_support() {
        let support: VertexSet = [2, 5, 9].into_iter().collect();
        let s: VertexSet = [5, 9].into_iter().collect();
        assert_eq!(s.compress(support).to_vec(), vec![1, 2]);
    }

    proptest! {
        #[test]
        fn lex_cmp_matches_sorted_lists(a in 0u64..(1 << 12), b in 0u64..(1 << 12)) {
            let (x, y) = (VertexSet::from_bits(a), VertexSet::from_bits(b));
            prop_assert_eq!(x.lex_cmp(y), x.to_vec().cmp(&y.to_vec()));
        }
    }
}
