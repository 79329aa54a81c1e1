//! Bitmask subsets of a ground set of at most [`MAX_ATOMS`] atoms.

use std::fmt;

/// Largest number of atoms a [`Subset`] can hold.
pub const MAX_ATOMS: usize = 32;

/// A subset of atom indices `0..MAX_ATOMS`, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Subset {
        assert!(n <= MAX_ATOMS, "at most {MAX_ATOMS} atoms");
        if n == MAX_ATOMS {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Subset {
        Subset(1u32 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Subset {
        it.into_iter().fold(Subset::EMPTY, |s, i| s.with(i))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_ATOMS && self.0 & (1 << i) != 0
    }

    pub fn with(self, i: usize) -> Subset {
        Subset(self.0 | (1 << i))
    }

    pub fn without(self, i: usize) -> Subset {
        Subset(self.0 & !(1 << i))
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest index, if any.
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> SubsetIter {
        SubsetIter(self.0)
    }

    /// All subsets of `self`, including `∅` and `self`, in increasing mask order.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(Subset(cur))
        })
    }

    /// Position of `sub` inside the dense table indexed by subsets of `self`:
    /// bit `r` of the result is set iff the `r`-th smallest element of `self`
    /// lies in `sub`.
    pub fn compress(self, sub: Subset) -> usize {
        debug_assert!(sub.is_subset_of(self));
        let mut out = 0usize;
        for (r, i) in self.iter().enumerate() {
            if sub.contains(i) {
                out |= 1 << r;
            }
        }
        out
    }

    /// Inverse of [`Subset::compress`].
    pub fn expand(self, code: usize) -> Subset {
        let mut out = Subset::EMPTY;
        for (r, i) in self.iter().enumerate() {
            if code & (1 << r) != 0 {
                out = out.with(i);
            }
        }
        out
    }

    /// Rank of atom `i` among the elements of `self`.
    pub fn rank_of(self, i: usize) -> Option<usize> {
        self.contains(i)
            .then(|| (self.0 & ((1u32 << i) - 1)).count_ones() as usize)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Subset::from_indices(iter)
    }
}

/// Ascending iterator over the indices of a [`Subset`].
#[derive(Clone)]
pub struct SubsetIter(u32);

impl Iterator for SubsetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(i as usize)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for SubsetIter {}
