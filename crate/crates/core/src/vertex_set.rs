//! Vertex subsets of the ground set `[m] = {1, ..., m}` stored as a machine-word bitmask.
//!
//! Vertex `v` occupies bit `v - 1`, so every subset of a ground set with at most
//! [`MAX_VERTICES`] vertices fits in a single `u64` and all lattice operations
//! (subset test, union, intersection) are single word operations. Complexes on
//! more than 64 vertices are rejected at construction time; every algorithm in
//! this crate that enumerates subsets is capped far below that anyway.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest ground set representable by a [`VertexSet`].
pub const MAX_VERTICES: usize = 64;

/// A set of vertex labels in `1..=64`.
///
/// The derived equality and hashing are on the bitmask. The [`Ord`] impl is the
/// lexicographic order of the increasing vertex sequences, which is the order
/// used for every sorted face list in the crate.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
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

    /// The full ground set `{1, ..., m}`.
    pub fn full(m: usize) -> Self {
        assert!(m <= MAX_VERTICES, "ground set of {m} vertices exceeds {MAX_VERTICES}");
        if m == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << m) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        assert!((1..=MAX_VERTICES).contains(&v), "vertex label {v} out of range");
        VertexSet(1u64 << (v - 1))
    }

    /// Builds a set from labels, panicking on labels outside `1..=64`.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        vertices.into_iter().fold(VertexSet::EMPTY, |acc, v| acc.with(v))
    }

    /// Like [`VertexSet::from_vertices`] but reports the first bad label.
    pub fn try_from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Result<Self, usize> {
        let mut set = VertexSet::EMPTY;
        for v in vertices {
            if !(1..=MAX_VERTICES).contains(&v) {
                return Err(v);
            }
            set = set.with(v);
        }
        Ok(set)
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        self | VertexSet::singleton(v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        self - VertexSet::singleton(v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1u64 << (v - 1)) != 0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_superset(self, other: VertexSet) -> bool {
        other.is_subset(self)
    }

    #[inline]
    pub const fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub const fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Smallest label, if any.
    pub fn min_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Largest label, if any.
    pub fn max_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Number of elements strictly smaller than `v`.
    #[inline]
    pub fn count_below(self, v: usize) -> usize {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        (self.0 & ((1u64 << (v - 1)) - 1)).count_ones() as usize
    }

    /// Number of elements strictly larger than `v`.
    #[inline]
    pub fn count_above(self, v: usize) -> usize {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        if v == 64 {
            0
        } else {
            (self.0 >> v).count_ones() as usize
        }
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self` (including `∅` and `self`), in increasing bitmask order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Parity of the permutation sorting the concatenation `self ++ other` (both
    /// increasing) into increasing order: the number of pairs `(a, b)` with `a` in
    /// `self`, `b` in `other` and `a > b`, modulo 2. Returns `+1` or `-1`.
    pub fn shuffle_sign(self, other: VertexSet) -> i32 {
        debug_assert!(self.is_disjoint(other));
        let inversions: usize = other.iter().map(|b| self.count_above(b)).sum();
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Position of `v` inside the increasing listing of `self`.
    pub fn position(self, v: usize) -> Option<usize> {
        self.contains(v).then(|| self.count_below(v))
    }

    /// Relabels through `map`, where `map[i]` is the new label of vertex `i + 1`.
    pub fn map_labels(self, map: &[usize]) -> VertexSet {
        self.iter().fold(VertexSet::EMPTY, |acc, v| acc.with(map[v - 1]))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        // The lowest differing vertex decides, unless the set lacking it has
        // nothing above it (then it is a proper prefix and sorts first).
        let diff = self.0 ^ other.0;
        let low = diff & diff.wrapping_neg();
        let above = !(low | (low - 1));
        let (holder, other_bits) = if self.0 & low != 0 {
            (Ordering::Less, other.0)
        } else {
            (Ordering::Greater, self.0)
        };
        if other_bits & above == 0 {
            holder.reverse()
        } else {
            holder
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by cardinality first, then lexicographically.
pub fn cmp_graded_lex(a: &VertexSet, b: &VertexSet) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        self.union(rhs)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(rhs)
    }
}

impl BitXor for VertexSet {
    type Output = VertexSet;
    fn bitxor(self, rhs: Self) -> Self {
        VertexSet(self.0 ^ rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        self.difference(rhs)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet::from_vertices(iter)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let labels = Vec::<usize>::deserialize(deserializer)?;
        VertexSet::try_from_vertices(labels)
            .map_err(|v| serde::de::Error::custom(format!("vertex label {v} out of range")))
    }
}

/// Increasing iterator over the labels of a [`VertexSet`].
#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// Carry-rippler enumeration of all submasks.
#[derive(Clone)]
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        let succ = cur.wrapping_sub(self.mask) & self.mask;
        self.next = (succ != 0).then_some(succ);
        Some(VertexSet(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    #[test]
    fn lex_order_matches_sequences() {
        let mut sets = [vs(&[2, 3]), vs(&[1, 3]), vs(&[1]), vs(&[1, 2, 4]), vs(&[1, 2]), vs(&[])];
        sets.sort();
        let seqs: Vec<Vec<usize>> = sets.iter().map(|s| s.to_vec()).collect();
        assert_eq!(
            seqs,
            vec![vec![], vec![1], vec![1, 2], vec![1, 2, 4], vec![1, 3], vec![2, 3]]
        );
    }

    #[test]
    fn subsets_enumerates_all() {
        let s = vs(&[1, 3, 6]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(VertexSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn shuffle_sign_counts_inversions() {
        assert_eq!(vs(&[1, 2]).shuffle_sign(vs(&[3])), 1);
        assert_eq!(vs(&[3]).shuffle_sign(vs(&[1, 2])), 1);
        assert_eq!(vs(&[2]).shuffle_sign(vs(&[1])), -1);
        assert_eq!(vs(&[2, 4]).shuffle_sign(vs(&[1, 3])), -1);
    }

    #[test]
    fn extremes() {
        let s = VertexSet::full(64);
        assert_eq!(s.len(), 64);
        assert_eq!(s.max_vertex(), Some(64));
        assert_eq!(s.count_above(64), 0);
        assert_eq!(VertexSet::try_from_vertices([0]), Err(0));
        assert_eq!(VertexSet::try_from_vertices([65]), Err(65));
    }

    proptest! {
        #[test]
        fn ord_agrees_with_vec_ord(a in any::<u16>(), b in any::<u16>()) {
            let (x, y) = (VertexSet::from_bits(a as u64), VertexSet::from_bits(b as u64));
            prop_assert_eq!(x.cmp(&y), x.to_vec().cmp(&y.to_vec()));
        }
    }
}
