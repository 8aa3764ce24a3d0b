//! Small fixed-width index sets.

use std::fmt;

/// Largest number of elements a [`Bits`] can index.
pub const MAX_BITS: usize = 64;

/// A set of indices `0..64`, stored as a bitmask.
///
/// Used for element sets of posets and lattices, named-point sets of
/// spaces, and finite supports of fan parts. Iteration is always in
/// increasing index order.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bits(pub u64);

impl Bits {
    pub const EMPTY: Bits = Bits(0);

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Bits {
        debug_assert!(n <= MAX_BITS);
        if n == MAX_BITS {
            Bits(u64::MAX)
        } else {
            Bits((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Bits {
        debug_assert!(i < MAX_BITS);
        Bits(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Bits {
        it.into_iter().fold(Bits::EMPTY, |acc, i| acc.with(i))
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        i < MAX_BITS && self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u64 << i);
    }

    #[inline]
    pub fn with(self, i: usize) -> Bits {
        Bits(self.0 | 1u64 << i)
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn union(self, o: Bits) -> Bits {
        Bits(self.0 | o.0)
    }

    #[inline]
    pub fn inter(self, o: Bits) -> Bits {
        Bits(self.0 & o.0)
    }

    #[inline]
    pub fn minus(self, o: Bits) -> Bits {
        Bits(self.0 & !o.0)
    }

    #[inline]
    pub fn is_subset(self, o: Bits) -> bool {
        self.0 & !o.0 == 0
    }

    #[inline]
    pub fn intersects(self, o: Bits) -> bool {
        self.0 & o.0 != 0
    }

    /// Largest member plus one, or 0 when empty.
    pub fn span(self) -> usize {
        MAX_BITS - self.0.leading_zeros() as usize
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> BitsIter {
        BitsIter(self.0)
    }
}

pub struct BitsIter(u64);

impl Iterator for BitsIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for BitsIter {}

impl IntoIterator for Bits {
    type Item = usize;
    type IntoIter = BitsIter;

    fn into_iter(self) -> BitsIter {
        self.iter()
    }
}

impl FromIterator<usize> for Bits {
    fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Self {
        Bits::from_indices(it)
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
