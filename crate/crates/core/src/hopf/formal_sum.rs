use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

/// A finite integer combination of basis elements. Zero coefficients are
/// never stored, and iteration follows the basis order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FormalSum<B: Ord> {
    terms: BTreeMap<B, i64>,
}

impl<B: Ord> Default for FormalSum<B> {
    fn default() -> Self {
        FormalSum {
            terms: BTreeMap::new(),
        }
    }
}

impl<B: Ord + std::fmt::Debug> std::fmt::Debug for FormalSum<B> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        f.debug_map()
            .entries(self.terms.iter().map(|(b, c)| (c, b)))
            .finish()
    }
}

impl<B: Ord + Clone> FormalSum<B> {
    pub fn zero() -> Self {
        FormalSum::default()
    }

    pub fn single(b: B) -> Self {
        FormalSum::term(b, 1)
    }

    pub fn term(b: B, c: i64) -> Self {
        let mut s = FormalSum::zero();
        s.add_term(b, c);
        s
    }

    pub fn add_term(&mut self, b: B, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(b);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &FormalSum<B>, c: i64) {
        if c == 0 {
            return;
        }
        for (b, &v) in &other.terms {
            self.add_term(b.clone(), c * v);
        }
    }

    pub fn scaled(&self, c: i64) -> Self {
        let mut out = FormalSum::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn coefficient(&self, b: &B) -> i64 {
        self.terms.get(b).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, i64)> {
        self.terms.iter().map(|(b, &c)| (b, c))
    }

    pub fn basis(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    /// Linear extension of a basis map.
    pub fn map_basis<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> C) -> FormalSum<C> {
        let mut out = FormalSum::zero();
        for (b, &c) in &self.terms {
            out.add_term(f(b), c);
        }
        out
    }

    /// Terms of `self − other` as `(basis, coefficient)` pairs.
    pub fn diff(&self, other: &FormalSum<B>) -> Vec<(B, i64)> {
        (self.clone() - other.clone()).terms.into_iter().collect()
    }
}

impl<B: Ord + Clone> FromIterator<(B, i64)> for FormalSum<B> {
    fn from_iter<I: IntoIterator<Item = (B, i64)>>(iter: I) -> Self {
        let mut s = FormalSum::zero();
        for (b, c) in iter {
            s.add_term(b, c);
        }
        s
    }
}

impl<B: Ord> IntoIterator for FormalSum<B> {
    type Item = (B, i64);
    type IntoIter = std::collections::btree_map::IntoIter<B, i64>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<B: Ord + Clone> Add for FormalSum<B> {
    type Output = FormalSum<B>;

    fn add(mut self, rhs: Self) -> Self {
        self.add_scaled(&rhs, 1);
        self
    }
}

impl<B: Ord + Clone> Sub for FormalSum<B> {
    type Output = FormalSum<B>;

    fn sub(mut self, rhs: Self) -> Self {
        self.add_scaled(&rhs, -1);
        self
    }
}

impl<B: Ord + Clone> Neg for FormalSum<B> {
    type Output = FormalSum<B>;

    fn neg(self) -> Self {
        self.scaled(-1)
    }
}
