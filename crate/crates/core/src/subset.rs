//! Subsets of the index set `I = {1..n}`.
//!
//! Stored as a bitmask over 0-based positions. Serialized (and printed) as a
//! sorted array of 1-based indices.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest supported rank.
pub const MAX_RANK: usize = 64;

#[derive(Copy, Clone, Default, PartialEq, Eq, Hash)]
pub struct IndexSet(u64);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    /// `{0, .., n-1}` in 0-based terms, i.e. the whole index set `I`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_RANK);
        if n == MAX_RANK {
            IndexSet(u64::MAX)
        } else {
            IndexSet((1u64 << n) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> Self {
        IndexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        IndexSet(1u64 << i)
    }

    /// Builds a set from 0-based positions.
    pub fn from_zero_based<I: IntoIterator<Item = usize>>(items: I) -> Self {
        items.into_iter().fold(IndexSet::EMPTY, |s, i| s.with(i))
    }

    /// Builds a set from 1-based indices; `None` if an index is 0 or above `n`.
    pub fn from_one_based(items: &[usize], n: usize) -> Option<Self> {
        let mut s = IndexSet::EMPTY;
        for &i in items {
            if i == 0 || i > n {
                return None;
            }
            s = s.with(i - 1);
        }
        Some(s)
    }

    pub fn to_one_based(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_RANK && self.0 & (1u64 << i) != 0
    }

    pub fn with(self, i: usize) -> Self {
        IndexSet(self.0 | (1u64 << i))
    }

    pub fn without(self, i: usize) -> Self {
        IndexSet(self.0 & !(1u64 << i))
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(self, other: Self) -> Self {
        IndexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        IndexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        IndexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// 0-based members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// All subsets of `self`, starting with the empty set.
    pub fn subsets(self) -> impl Iterator<Item = IndexSet> {
        let full = self.0;
        let mut cur: Option<u64> = Some(0);
        std::iter::from_fn(move || {
            let s = cur?;
            cur = if s == full { None } else { Some((s.wrapping_sub(full)) & full) };
            Some(IndexSet(s))
        })
    }
}

// Lexicographic on the sorted member lists, so `[] < [1,2] < [1,2,3] < [1,3]`.
impl Ord for IndexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

impl Serialize for IndexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IndexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let items = Vec::<usize>::deserialize(d)?;
        IndexSet::from_one_based(&items, MAX_RANK)
            .ok_or_else(|| serde::de::Error::custom("subset indices must lie in 1..=64"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_based_round_trip() {
        let s = IndexSet::from_one_based(&[3, 1], 3).unwrap();
        assert_eq!(s.to_one_based(), vec![1, 3]);
        assert!(IndexSet::from_one_based(&[0], 3).is_none());
        assert!(IndexSet::from_one_based(&[4], 3).is_none());
    }

    #[test]
    fn subsets_of_three() {
        let all: Vec<_> = IndexSet::full(3).subsets().collect();
        assert_eq!(all.len(), 8);
        assert_eq!(all[0], IndexSet::EMPTY);
        let sub: Vec<_> = IndexSet::from_zero_based([0, 2]).subsets().collect();
        assert_eq!(sub.len(), 4);
        assert!(sub.iter().all(|s| s.is_subset(IndexSet::from_zero_based([0, 2]))));
    }

    #[test]
    fn ordering_is_lexicographic() {
        let e = IndexSet::EMPTY;
        let a = IndexSet::from_zero_based([0, 1]);
        let b = IndexSet::from_zero_based([0, 1, 2]);
        let c = IndexSet::from_zero_based([0, 2]);
        let mut v = vec![c, b, e, a];
        v.sort();
        assert_eq!(v, vec![e, a, b, c]);
    }

    #[test]
    fn display() {
        assert_eq!(IndexSet::from_zero_based([1, 0]).to_string(), "{1,2}");
        assert_eq!(IndexSet::EMPTY.to_string(), "{}");
    }
}
