use std::cmp::Ordering;
use std::fmt;

const WORD: usize = 64;

/// A subset of a host graph's edge table, stored as a dense bit vector over edge indices.
///
/// Ordering compares the ascending index lists lexicographically, so `{0, 1}` sorts
/// before `{0, 2}` and `{0, 2}` before `{1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSubset {
    len: usize,
    words: Vec<u64>,
}

impl EdgeSubset {
    pub fn empty(len: usize) -> Self {
        EdgeSubset {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    /// Panics if an index is outside the universe.
    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(len);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Size of the universe (the host graph's edge count).
    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / WORD] & (1u64 << (i % WORD)) != 0
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len, "edge index {i} outside universe of {}", self.len);
        self.words[i / WORD] |= 1u64 << (i % WORD);
    }

    pub fn remove(&mut self, i: usize) {
        if i < self.len {
            self.words[i / WORD] &= !(1u64 << (i % WORD));
        }
    }

    pub fn with(&self, i: usize) -> Self {
        let mut s = self.clone();
        s.insert(i);
        s
    }

    pub fn without(&self, i: usize) -> Self {
        let mut s = self.clone();
        s.remove(i);
        s
    }

    /// Ascending member indices.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let tz = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * WORD + tz)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn check_universe(&self, other: &Self) {
        assert_eq!(self.len, other.len, "edge subsets over different universes");
    }

    /// `|self \ other|`
    pub fn difference_count(&self, other: &Self) -> usize {
        self.check_universe(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & !b).count_ones() as usize)
            .sum()
    }

    pub fn symmetric_difference_count(&self, other: &Self) -> usize {
        self.check_universe(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.check_universe(other);
        EdgeSubset {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_universe(other);
        EdgeSubset {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check_universe(other);
        EdgeSubset {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn complement(&self) -> Self {
        let mut s = EdgeSubset {
            len: self.len,
            words: self.words.iter().map(|w| !w).collect(),
        };
        let tail = self.len % WORD;
        if tail != 0 {
            if let Some(last) = s.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
        s
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.difference_count(other) == 0
    }
}

impl Ord for EdgeSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter()).then(self.len.cmp(&other.len))
    }
}

impl PartialOrd for EdgeSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_membership() {
        let mut s = EdgeSubset::empty(70);
        s.insert(0);
        s.insert(65);
        assert!(s.contains(65));
        assert!(!s.contains(64));
        assert_eq!(s.to_vec(), vec![0, 65]);
        s.remove(0);
        assert_eq!(s.count(), 1);
    }

    #[test]
    fn complement_masks_tail() {
        let s = EdgeSubset::from_indices(5, [1, 3]);
        assert_eq!(s.complement().to_vec(), vec![0, 2, 4]);
        assert_eq!(EdgeSubset::empty(0).complement().count(), 0);
    }

    #[test]
    fn lexicographic_order() {
        let a = EdgeSubset::from_indices(4, [0, 1]);
        let b = EdgeSubset::from_indices(4, [0, 2]);
        let c = EdgeSubset::from_indices(4, [1]);
        assert!(a < b && b < c);
    }

    #[test]
    fn set_algebra() {
        let a = EdgeSubset::from_indices(6, [0, 1, 2]);
        let b = EdgeSubset::from_indices(6, [1, 2, 5]);
        assert_eq!(a.difference_count(&b), 1);
        assert_eq!(a.symmetric_difference_count(&b), 2);
        assert_eq!(a.union(&b).to_vec(), vec![0, 1, 2, 5]);
        assert_eq!(a.intersection(&b).to_vec(), vec![1, 2]);
        assert!(a.intersection(&b).is_subset(&a));
    }
}
