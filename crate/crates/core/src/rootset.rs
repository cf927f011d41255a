//! Fixed-width bitset over 0-based root indices.

use std::fmt;

/// Number of 64-bit words backing a [`RootSet`].
const WORDS: usize = 4;

/// Largest number of positive roots a [`RootSet`] can hold.
pub const MAX_ROOTS: usize = 64 * WORDS;

/// A set of 0-based positive-root indices (CHEVIE index minus one).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSet([u64; WORDS]);

impl RootSet {
    /// The empty set.
    pub const EMPTY: RootSet = RootSet([0; WORDS]);

    /// The set {0, 1, ..., n-1}.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ROOTS);
        let mut s = Self::EMPTY;
        for (w, word) in s.0.iter_mut().enumerate() {
            let lo = 64 * w;
            if n >= lo + 64 {
                *word = u64::MAX;
            } else if n > lo {
                *word = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    /// The singleton {i}.
    pub fn single(i: usize) -> Self {
        let mut s = Self::EMPTY;
        s.insert(i);
        s
    }

    pub fn contains(&self, i: usize) -> bool {
        (self.0[i >> 6] >> (i & 63)) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0[i >> 6] |= 1u64 << (i & 63);
    }

    pub fn remove(&mut self, i: usize) {
        self.0[i >> 6] &= !(1u64 << (i & 63));
    }

    pub fn with(mut self, i: usize) -> Self {
        self.insert(i);
        self
    }

    pub fn without(mut self, i: usize) -> Self {
        self.remove(i);
        self
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn union(&self, o: &Self) -> Self {
        let mut r = *self;
        for k in 0..WORDS {
            r.0[k] |= o.0[k];
        }
        r
    }

    pub fn intersection(&self, o: &Self) -> Self {
        let mut r = *self;
        for k in 0..WORDS {
            r.0[k] &= o.0[k];
        }
        r
    }

    pub fn difference(&self, o: &Self) -> Self {
        let mut r = *self;
        for k in 0..WORDS {
            r.0[k] &= !o.0[k];
        }
        r
    }

    pub fn intersects(&self, o: &Self) -> bool {
        (0..WORDS).any(|k| self.0[k] & o.0[k] != 0)
    }

    pub fn is_subset(&self, o: &Self) -> bool {
        (0..WORDS).all(|k| self.0[k] & !o.0[k] == 0)
    }

    /// Smallest element, if any.
    pub fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| 64 * k + w.trailing_zeros() as usize)
    }

    /// Elements in increasing order.
    pub fn iter(&self) -> Iter {
        Iter { words: self.0, word: 0 }
    }

    /// Elements as 1-based CHEVIE indices.
    pub fn to_chevie(&self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }
}

/// Serialized as the sorted list of CHEVIE indices.
impl serde::Serialize for RootSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.to_chevie())
    }
}

impl FromIterator<usize> for RootSet {
    fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = Self::EMPTY;
        for i in it {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterator over the elements of a [`RootSet`].
pub struct Iter {
    words: [u64; WORDS],
    word: usize,
}

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.words[self.word];
            if w != 0 {
                let b = w.trailing_zeros() as usize;
                self.words[self.word] = w & (w - 1);
                return Some(64 * self.word + b);
            }
            self.word += 1;
        }
        None
    }
}

impl<'a> IntoIterator for &'a RootSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_iter() {
        let s = RootSet::full(70);
        assert_eq!(s.len(), 70);
        assert_eq!(s.iter().last(), Some(69));
        assert!(!s.contains(70));
        assert_eq!(RootSet::full(0), RootSet::EMPTY);
    }

    #[test]
    fn set_ops() {
        let a: RootSet = [1, 5, 100].into_iter().collect();
        let b: RootSet = [5, 200].into_iter().collect();
        assert_eq!(a.intersection(&b).to_chevie(), vec![6]);
        assert_eq!(a.difference(&b).len(), 2);
        assert!(a.intersection(&b).is_subset(&b));
        assert_eq!(a.union(&b).first(), Some(1));
    }
}
