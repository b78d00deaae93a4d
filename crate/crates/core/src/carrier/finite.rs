//! Subsets of small finite carriers as bit masks.

use std::fmt;

/// Largest number of atoms a finite carrier may hold.
pub const MAX_ATOMS: usize = 64;

/// A subset of a finite carrier `{0, .., n-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct AtomSet(pub u64);

impl AtomSet {
    pub const EMPTY: AtomSet = AtomSet(0);

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            AtomSet(u64::MAX)
        } else {
            AtomSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        AtomSet(1u64 << i)
    }

    pub fn from_atoms(atoms: impl IntoIterator<Item = usize>) -> Self {
        AtomSet(atoms.into_iter().fold(0, |m, i| m | (1u64 << i)))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(self, o: Self) -> Self {
        AtomSet(self.0 | o.0)
    }

    pub fn intersect(self, o: Self) -> Self {
        AtomSet(self.0 & o.0)
    }

    pub fn difference(self, o: Self) -> Self {
        AtomSet(self.0 & !o.0)
    }

    pub fn symmetric_difference(self, o: Self) -> Self {
        AtomSet(self.0 ^ o.0)
    }

    pub fn complement(self, n: usize) -> Self {
        AtomSet(!self.0 & Self::full(n).0)
    }

    pub fn is_subset_of(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn is_disjoint(self, o: Self) -> bool {
        self.0 & o.0 == 0
    }

    pub fn atoms(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }

    /// Every subset of a carrier of size `n`, in bit-pattern order.
    pub fn all(n: usize) -> impl Iterator<Item = AtomSet> {
        assert!(n < 32, "power set too large");
        (0..(1u64 << n)).map(AtomSet)
    }

    /// Every subset of `self`.
    pub fn subsets(self) -> impl Iterator<Item = AtomSet> {
        let m = self.0;
        let mut cur = Some(0u64);
        std::iter::from_fn(move || {
            let c = cur?;
            cur = if c == m { None } else { Some((c.wrapping_sub(m)) & m) };
            Some(AtomSet(c))
        })
    }
}

impl fmt::Display for AtomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.atoms().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}
