//! Fixed-capacity vertex sets backed by 64-bit words.

use std::fmt;

use smallvec::SmallVec;

type Words = SmallVec<[u64; 4]>;

const WORD_BITS: usize = 64;

/// A set of vertex indices in `0..capacity`.
///
/// The capacity is fixed when the set is created. Binary operations on sets
/// of different capacity are contract violations and panic in debug builds.
/// Words beyond the capacity are always kept zeroed, so derived equality and
/// hashing agree with set equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    capacity: usize,
    words: Words,
}

fn word_count(capacity: usize) -> usize {
    capacity.div_ceil(WORD_BITS)
}

impl VertexSet {
    pub fn new(capacity: usize) -> Self {
        let mut words = Words::new();
        words.resize(word_count(capacity), 0);
        Self { capacity, words }
    }

    /// The set `{0, .., capacity - 1}`.
    pub fn full(capacity: usize) -> Self {
        let mut set = Self::new(capacity);
        for w in set.words.iter_mut() {
            *w = !0;
        }
        set.trim();
        set
    }

    pub fn singleton(capacity: usize, v: usize) -> Self {
        let mut set = Self::new(capacity);
        set.insert(v);
        set
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(capacity: usize, vertices: I) -> Self {
        let mut set = Self::new(capacity);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    fn trim(&mut self) {
        let rem = self.capacity % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn capacity(&self) -> usize {
        self.capacity
    }

    /// Raw words, least significant bit first.
    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.capacity && self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    /// Adds `v`; returns whether it was newly inserted.
    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(
            v < self.capacity,
            "vertex {v} out of range for capacity {}",
            self.capacity
        );
        let word = &mut self.words[v / WORD_BITS];
        let mask = 1u64 << (v % WORD_BITS);
        let fresh = *word & mask == 0;
        *word |= mask;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.capacity {
            return false;
        }
        let word = &mut self.words[v / WORD_BITS];
        let mask = 1u64 << (v % WORD_BITS);
        let present = *word & mask != 0;
        *word &= !mask;
        present
    }

    pub fn clear(&mut self) {
        for w in self.words.iter_mut() {
            *w = 0;
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD_BITS + w.trailing_zeros() as usize)
    }

    #[inline]
    fn check(&self, other: &Self) {
        debug_assert_eq!(
            self.capacity, other.capacity,
            "vertex set capacity mismatch"
        );
    }

    pub fn union_with(&mut self, other: &Self) {
        self.check(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.check(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &Self) {
        self.check(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    /// Complement within `0..capacity`.
    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        for w in out.words.iter_mut() {
            *w = !*w;
        }
        out.trim();
        out
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// `|self ∪ other|` without allocating.
    pub fn union_len(&self, other: &Self) -> usize {
        self.check(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    /// `|self \ other|` without allocating.
    pub fn difference_len(&self, other: &Self) -> usize {
        self.check(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & !b).count_ones() as usize)
            .sum()
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD_BITS + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_membership() {
        let mut s = VertexSet::new(130);
        assert!(s.is_empty());
        assert!(s.insert(0));
        assert!(s.insert(129));
        assert!(!s.insert(129));
        assert!(s.contains(129) && s.contains(0) && !s.contains(64));
        assert_eq!(s.len(), 2);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 129]);
        assert_eq!(s.first(), Some(0));
        assert!(s.remove(0));
        assert_eq!(s.first(), Some(129));
    }

    #[test]
    fn full_and_complement_respect_capacity() {
        let full = VertexSet::full(70);
        assert_eq!(full.len(), 70);
        assert_eq!(VertexSet::new(70).complement(), full);
        assert!(full.complement().is_empty());
        assert_eq!(VertexSet::full(0).len(), 0);
    }

    #[test]
    #[should_panic]
    fn insert_out_of_range_panics() {
        VertexSet::new(3).insert(3);
    }

    fn arb_pair() -> impl Strategy<Value = (usize, Vec<usize>, Vec<usize>)> {
        (1usize..200).prop_flat_map(|cap| {
            (
                Just(cap),
                proptest::collection::vec(0..cap, 0..40),
                proptest::collection::vec(0..cap, 0..40),
            )
        })
    }

    proptest! {
        #[test]
        fn set_algebra_matches_membership((cap, xs, ys) in arb_pair()) {
            let a = VertexSet::from_vertices(cap, xs.iter().copied());
            let b = VertexSet::from_vertices(cap, ys.iter().copied());
            let u = a.union(&b);
            let i = a.intersection(&b);
            let d = a.difference(&b);
            let c = a.complement();
            for v in 0..cap {
                prop_assert_eq!(u.contains(v), a.contains(v) || b.contains(v));
                prop_assert_eq!(i.contains(v), a.contains(v) && b.contains(v));
                prop_assert_eq!(d.contains(v), a.contains(v) && !b.contains(v));
                prop_assert_eq!(c.contains(v), !a.contains(v));
            }
            prop_assert_eq!(a.union_len(&b), u.len());
            prop_assert_eq!(a.difference_len(&b), d.len());
            prop_assert_eq!(a.is_disjoint(&b), i.is_empty());
            prop_assert_eq!(i.is_subset(&a), true);
            prop_assert!(a.iter().all(|v| v < cap));
            let mut sorted: Vec<usize> = xs.clone();
            sorted.sort_unstable();
            sorted.dedup();
            prop_assert_eq!(a.iter().collect::<Vec<_>>(), sorted);
        }
    }
}
