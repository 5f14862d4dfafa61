//! Subsets of a finite carrier as 64-bit masks.
//!
//! Every algebra in this crate indexes its elements densely from 0, so a
//! subset is a `u64` with bit `i` set when element `i` is a member. Carriers
//! larger than 64 are rejected at construction time (see [`crate::Error`]).

/// A subset of a carrier with at most 64 elements.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ElemSet(pub u64);

/// Largest carrier size the bitmask representation supports.
pub const MAX_ELEMENTS: usize = 64;

impl ElemSet {
    /// The empty subset.
    pub const EMPTY: ElemSet = ElemSet(0);

    /// The full carrier of size `n`.
    pub fn full(n: usize) -> ElemSet {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == 64 {
            ElemSet(!0)
        } else {
            ElemSet((1u64 << n) - 1)
        }
    }

    /// The singleton `{i}`.
    pub fn singleton(i: usize) -> ElemSet {
        ElemSet(1u64 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u64 << i);
    }

    pub fn union(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 | other.0)
    }

    pub fn inter(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & other.0)
    }

    /// Set difference `self \ other`.
    pub fn minus(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & !other.0)
    }

    /// Complement within a carrier of size `n`.
    pub fn complement(self, n: usize) -> ElemSet {
        ElemSet::full(n).minus(self)
    }

    pub fn is_subset(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Members in ascending index order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = ElemSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl std::fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// All subsets of a carrier of size `n` in ascending mask order.
///
/// Only intended for small `n` (test oracles, down-set families of spectra).
pub fn all_subsets(n: usize) -> impl Iterator<Item = ElemSet> {
    debug_assert!(n < 32, "all_subsets is an oracle for small carriers");
    (0u64..(1u64 << n)).map(ElemSet)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra_basics() {
        let a: ElemSet = [0, 2, 5].into_iter().collect();
        let b: ElemSet = [2, 3].into_iter().collect();
        assert!(a.contains(2) && !a.contains(1));
        assert_eq!(a.union(b).len(), 4);
        assert_eq!(a.inter(b), ElemSet::singleton(2));
        assert_eq!(a.minus(b).len(), 2);
        assert!(ElemSet::singleton(2).is_subset(a));
        assert_eq!(a.complement(6), [1, 3, 4].into_iter().collect());
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 2, 5]);
    }

    #[test]
    fn full_carrier_at_word_boundary() {
        assert_eq!(ElemSet::full(64).len(), 64);
        assert_eq!(ElemSet::full(0), ElemSet::EMPTY);
    }

    #[test]
    fn subset_enumeration_is_ascending() {
        let all: Vec<ElemSet> = all_subsets(3).collect();
        assert_eq!(all.len(), 8);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }
}
