//! Fixed-domain dense bitset used for ideal member sets.
//!
//! Predicate scans perform millions of membership tests, so ideals are kept
//! as index sets over `0..domain` with word-parallel set algebra.

/// Dense bitset over a fixed domain `0..domain`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitSet {
    domain: usize,
    words: Vec<u64>,
}

fn location(bit: usize) -> (usize, u64) {
    (bit / 64, 1u64 << (bit % 64))
}

impl BitSet {
    pub fn new(domain: usize) -> Self {
        Self {
            domain,
            words: vec![0u64; domain.div_ceil(64)],
        }
    }

    pub fn domain(&self) -> usize {
        self.domain
    }

    pub fn contains(&self, bit: usize) -> bool {
        debug_assert!(bit < self.domain);
        let (i, mask) = location(bit);
        self.words[i] & mask != 0
    }

    /// Inserts `bit`; returns true if it was not already present.
    pub fn insert(&mut self, bit: usize) -> bool {
        debug_assert!(bit < self.domain);
        let (i, mask) = location(bit);
        let old = self.words[i];
        self.words[i] = old | mask;
        old & mask == 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.domain, other.domain);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.domain, other.domain);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        debug_assert_eq!(self.domain, other.domain);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Ascending iterator over set bits.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + tz)
            })
        })
    }

    /// Smallest member of `self \ other`, if any.
    pub fn first_difference(&self, other: &BitSet) -> Option<usize> {
        debug_assert_eq!(self.domain, other.domain);
        for (i, (a, b)) in self.words.iter().zip(&other.words).enumerate() {
            let d = a & !b;
            if d != 0 {
                return Some(i * 64 + d.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for BitSet {
    /// Builds a set whose domain is taken from the max element; mostly for
    /// tests.  Prefer `BitSet::new` with the ring size in library code.
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let items: Vec<usize> = iter.into_iter().collect();
        let domain = items.iter().max().map_or(0, |&m| m + 1);
        let mut set = BitSet::new(domain);
        for item in items {
            set.insert(item);
        }
        set
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_and_iterate_ascending() {
        let mut s = BitSet::new(130);
        for &b in &[129, 0, 64, 63, 65] {
            assert!(s.insert(b));
        }
        assert!(!s.insert(64));
        assert_eq!(s.to_vec(), vec![0, 63, 64, 65, 129]);
        assert_eq!(s.len(), 5);
    }

    #[test]
    fn subset_and_difference() {
        let mut a = BitSet::new(100);
        let mut b = BitSet::new(100);
        for x in [2, 40, 99] {
            a.insert(x);
            b.insert(x);
        }
        assert!(a.is_subset(&b));
        a.insert(70);
        assert!(!a.is_subset(&b));
        assert_eq!(a.first_difference(&b), Some(70));
        assert_eq!(b.first_difference(&a), None);
    }

    #[test]
    fn word_ops_match_set_semantics() {
        let mut a = BitSet::new(70);
        let mut b = BitSet::new(70);
        for x in (0..70).step_by(3) {
            a.insert(x);
        }
        for x in (0..70).step_by(2) {
            b.insert(x);
        }
        let mut union = a.clone();
        union.union_with(&b);
        let mut inter = a.clone();
        inter.intersect_with(&b);
        for x in 0..70 {
            assert_eq!(union.contains(x), x % 3 == 0 || x % 2 == 0);
            assert_eq!(inter.contains(x), x % 6 == 0);
        }
    }
}
