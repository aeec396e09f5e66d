//! Fixed-capacity bitset backed by `u64` words.
//!
//! The pair-cover machinery stores one mask per vertex over the C(n,2) pair
//! universe, so the hot operations are word-wise: union, popcount of
//! `a & !b`, and scans for set/unset bits.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitSet {
    nbits: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(nbits: usize) -> Self {
        BitSet {
            nbits,
            words: vec![0; nbits.div_ceil(64)],
        }
    }

    pub fn len(&self) -> usize {
        self.nbits
    }

    pub fn is_empty(&self) -> bool {
        self.nbits == 0
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.nbits);
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    #[inline]
    pub fn unset(&mut self, i: usize) {
        debug_assert!(i < self.nbits);
        self.words[i / 64] &= !(1u64 << (i % 64));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.nbits);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// True iff every bit below `nbits` is set.
    pub fn is_full(&self) -> bool {
        self.count_ones() == self.nbits
    }

    pub fn union_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// Popcount of `self & !other`: how many of our bits are not in `other`.
    pub fn count_and_not(&self, other: &BitSet) -> usize {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & !b).count_ones() as usize)
            .sum()
    }

    /// Indices of set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(move |(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * 64 + b)
            })
        })
    }

    /// Indices of unset bits below `nbits`, ascending.
    pub fn zeros(&self) -> impl Iterator<Item = usize> + '_ {
        let nbits = self.nbits;
        self.words.iter().enumerate().flat_map(move |(wi, &w)| {
            let mut bits = !w;
            if wi == nbits / 64 {
                // mask off the tail beyond nbits
                let rem = nbits % 64;
                bits &= if rem == 0 { 0 } else { (1u64 << rem) - 1 };
            }
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * 64 + b)
            })
        })
    }
}
