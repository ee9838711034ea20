//! Fixed-capacity vertex sets.
//!
//! Every graph in this crate lives on vertex ids `0..=MAX_VERTEX_ID`, so a
//! set of vertices is four machine words. Sets are `Copy` and all the usual
//! operations are branch-free word ops, which is what the cluster search
//! leans on.

use std::fmt;

/// Largest vertex id a [`VertexSet`] can hold.
pub const MAX_VERTEX_ID: usize = 255;

const WORDS: usize = 4;

/// A set of vertex ids in `0..=MAX_VERTEX_ID`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet([u64; WORDS]);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet([0; WORDS]);

    pub fn new() -> Self {
        Self::EMPTY
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::EMPTY;
        s.insert(v);
        s
    }

    /// All ids in `0..n`.
    pub fn first_n(n: usize) -> Self {
        assert!(n <= MAX_VERTEX_ID + 1);
        let mut s = Self::EMPTY;
        for w in 0..WORDS {
            let lo = w * 64;
            if n >= lo + 64 {
                s.0[w] = !0;
            } else if n > lo {
                s.0[w] = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v <= MAX_VERTEX_ID);
        self.0[v / 64] & (1u64 << (v % 64)) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v <= MAX_VERTEX_ID, "vertex id {v} exceeds capacity");
        self.0[v / 64] |= 1u64 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v <= MAX_VERTEX_ID);
        self.0[v / 64] &= !(1u64 << (v % 64));
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0 == [0; WORDS]
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn union(&self, other: &Self) -> Self {
        let mut out = *self;
        for w in 0..WORDS {
            out.0[w] |= other.0[w];
        }
        out
    }

    #[inline]
    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = *self;
        for w in 0..WORDS {
            out.0[w] &= other.0[w];
        }
        out
    }

    #[inline]
    pub fn difference(&self, other: &Self) -> Self {
        let mut out = *self;
        for w in 0..WORDS {
            out.0[w] &= !other.0[w];
        }
        out
    }

    #[inline]
    pub fn union_with(&mut self, other: &Self) {
        for w in 0..WORDS {
            self.0[w] |= other.0[w];
        }
    }

    #[inline]
    pub fn intersects(&self, other: &Self) -> bool {
        (0..WORDS).any(|w| self.0[w] & other.0[w] != 0)
    }

    #[inline]
    pub fn is_subset(&self, other: &Self) -> bool {
        (0..WORDS).all(|w| self.0[w] & !other.0[w] == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        !self.intersects(other)
    }

    /// Smallest member, if any.
    pub fn min(&self) -> Option<usize> {
        for w in 0..WORDS {
            if self.0[w] != 0 {
                return Some(w * 64 + self.0[w].trailing_zeros() as usize);
            }
        }
        None
    }

    /// Largest member, if any.
    pub fn max(&self) -> Option<usize> {
        for w in (0..WORDS).rev() {
            if self.0[w] != 0 {
                return Some(w * 64 + 63 - self.0[w].leading_zeros() as usize);
            }
        }
        None
    }

    /// Smallest id not in the set.
    pub fn min_absent(&self) -> usize {
        for w in 0..WORDS {
            if self.0[w] != !0 {
                return w * 64 + self.0[w].trailing_ones() as usize;
            }
        }
        WORDS * 64
    }

    /// Members in ascending order.
    pub fn iter(&self) -> VertexIter {
        VertexIter {
            words: self.0,
            word: 0,
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
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

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

pub struct VertexIter {
    words: [u64; WORDS],
    word: usize,
}

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.words[self.word];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.words[self.word] &= w - 1;
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
        }
        None
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut s = VertexSet::new();
        assert!(s.is_empty());
        s.insert(3);
        s.insert(70);
        s.insert(255);
        assert_eq!(s.len(), 3);
        assert!(s.contains(70));
        assert!(!s.contains(71));
        assert_eq!(s.to_vec(), vec![3, 70, 255]);
        assert_eq!(s.min(), Some(3));
        assert_eq!(s.max(), Some(255));
        s.remove(70);
        assert_eq!(s.to_vec(), vec![3, 255]);
    }

    #[test]
    fn min_absent_skips_members() {
        let s: VertexSet = [0, 1, 2, 4].into_iter().collect();
        assert_eq!(s.min_absent(), 3);
        let t = VertexSet::first_n(130);
        assert_eq!(t.min_absent(), 130);
    }

    #[test]
    fn set_algebra() {
        let a: VertexSet = [1, 2, 3].into_iter().collect();
        let b: VertexSet = [3, 4].into_iter().collect();
        assert_eq!(a.union(&b).to_vec(), vec![1, 2, 3, 4]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3]);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 2]);
        assert!(a.intersects(&b));
        assert!(!a.is_subset(&b));
        assert!(a.intersection(&b).is_subset(&a));
    }
}
