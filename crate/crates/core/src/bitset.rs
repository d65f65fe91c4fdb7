use std::cmp::Ordering;
use std::fmt;

const WORD_BITS: usize = 64;

/// A fixed-capacity subset of the vertex ids `0..capacity`.
///
/// This is the representation used for adjacency rows, candidate sets and
/// certificates alike. Bits at or above `capacity` are always clear.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    capacity: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(capacity: usize) -> Self {
        Self {
            capacity,
            words: vec![0; capacity.div_ceil(WORD_BITS)],
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut set = Self::new(capacity);
        for w in set.words.iter_mut() {
            *w = u64::MAX;
        }
        set.trim();
        set
    }

    /// Builds a set from ids. Panics if an id is out of range.
    pub fn from_ids<I: IntoIterator<Item = usize>>(capacity: usize, ids: I) -> Self {
        let mut set = Self::new(capacity);
        for v in ids {
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

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.capacity
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.capacity && (self.words[v / WORD_BITS] >> (v % WORD_BITS)) & 1 == 1
    }

    /// Inserts `v`, returning whether it was newly added.
    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(
            v < self.capacity,
            "vertex {v} out of range for capacity {}",
            self.capacity
        );
        let word = &mut self.words[v / WORD_BITS];
        let bit = 1u64 << (v % WORD_BITS);
        let fresh = *word & bit == 0;
        *word |= bit;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.capacity {
            return false;
        }
        let word = &mut self.words[v / WORD_BITS];
        let bit = 1u64 << (v % WORD_BITS);
        let present = *word & bit != 0;
        *word &= !bit;
        present
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    fn assert_same_capacity(&self, other: &Self) {
        assert_eq!(self.capacity, other.capacity, "vertex set capacity mismatch");
    }

    pub fn union_with(&mut self, other: &Self) {
        self.assert_same_capacity(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.assert_same_capacity(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &Self) {
        self.assert_same_capacity(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn complement(&self) -> Self {
        let mut out = Self {
            capacity: self.capacity,
            words: self.words.iter().map(|w| !w).collect(),
        };
        out.trim();
        out
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.assert_same_capacity(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.assert_same_capacity(other);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn intersection_len(&self, other: &Self) -> usize {
        self.assert_same_capacity(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Smallest id in the set.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Smallest id in `0..capacity` not in the set.
    pub fn first_missing(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != u64::MAX {
                let v = i * WORD_BITS + (!w).trailing_zeros() as usize;
                return (v < self.capacity).then_some(v);
            }
        }
        None
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Compares the sorted id sequences lexicographically.
    pub fn cmp_lex(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

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

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_set_respects_capacity() {
        let s = VertexSet::full(70);
        assert_eq!(s.len(), 70);
        assert!(s.is_full());
        assert_eq!(s.first_missing(), None);
        assert!(!s.contains(70));
    }

    #[test]
    fn first_missing_and_complement() {
        let s = VertexSet::from_ids(130, [0, 1, 2, 64, 129]);
        assert_eq!(s.first_missing(), Some(3));
        let c = s.complement();
        assert_eq!(c.len(), 125);
        assert!(!c.contains(129));
        assert_eq!(VertexSet::new(0).first_missing(), None);
    }

    #[test]
    #[should_panic]
    fn insert_out_of_range_panics() {
        VertexSet::new(5).insert(5);
    }

    #[test]
    fn lex_order_on_sorted_sequences() {
        let a = VertexSet::from_ids(10, [0, 1, 5]);
        let b = VertexSet::from_ids(10, [0, 2, 3]);
        assert_eq!(a.cmp_lex(&b), Ordering::Less);
        assert_eq!(b.cmp_lex(&a), Ordering::Greater);
    }

    proptest! {
        #[test]
        fn iter_matches_membership(ids in proptest::collection::btree_set(0usize..200, 0..40)) {
            let s = VertexSet::from_ids(200, ids.iter().copied());
            prop_assert_eq!(s.to_vec(), ids.iter().copied().collect::<Vec<_>>());
            prop_assert_eq!(s.len(), ids.len());
            for v in 0..200 {
                prop_assert_eq!(s.contains(v), ids.contains(&v));
            }
        }

        #[test]
        fn set_algebra_agrees_with_btreeset(
            a in proptest::collection::btree_set(0usize..100, 0..30),
            b in proptest::collection::btree_set(0usize..100, 0..30),
        ) {
            let sa = VertexSet::from_ids(100, a.iter().copied());
            let sb = VertexSet::from_ids(100, b.iter().copied());
            let mut u = sa.clone();
            u.union_with(&sb);
            prop_assert_eq!(u.to_vec(), a.union(&b).copied().collect::<Vec<_>>());
            let mut d = sa.clone();
            d.difference_with(&sb);
            prop_assert_eq!(d.to_vec(), a.difference(&b).copied().collect::<Vec<_>>());
            prop_assert_eq!(sa.intersection_len(&sb), a.intersection(&b).count());
            prop_assert_eq!(sa.is_subset(&sb), a.is_subset(&b));
        }
    }
}
