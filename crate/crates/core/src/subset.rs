//! Nonempty subsets of `[n]` stored as bitmasks, together with the variable
//! order used on the Stanley-Reisner variables `y_S`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest ambient size supported by the bitmask subset representation.
pub const MAX_N: usize = 16;

/// A subset of `[n]` (element `i` is bit `i - 1`). Used as the index of the
/// variable `y_S`; the empty set only appears as a transient value.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_bits(bits: u32) -> Self {
        Subset(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// Builds a subset from 1-based elements.
    pub fn from_elems<I: IntoIterator<Item = usize>>(elems: I) -> Result<Self> {
        let mut bits = 0u32;
        for e in elems {
            if e == 0 || e > MAX_N {
                return Err(Error::domain(format!("subset element {e} outside 1..={MAX_N}")));
            }
            bits |= 1 << (e - 1);
        }
        Ok(Subset(bits))
    }

    /// `[m] = {1, ..., m}`.
    pub fn prefix(m: usize) -> Self {
        debug_assert!(m <= MAX_N);
        if m == 0 {
            Subset(0)
        } else {
            Subset(u32::MAX >> (32 - m))
        }
    }

    pub fn singleton(e: usize) -> Self {
        Subset(1 << (e - 1))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        (1..=32).contains(&e) && self.0 & (1 << (e - 1)) != 0
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// True when neither set contains the other.
    pub fn incomparable(self, other: Subset) -> bool {
        !self.is_subset_of(other) && !other.is_subset_of(self)
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

    pub fn insert(self, e: usize) -> Subset {
        Subset(self.0 | (1 << (e - 1)))
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 32 - self.0.leading_zeros() as usize)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as usize + 1;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    /// The complement inside `[n]`.
    pub fn complement(self, n: usize) -> Subset {
        Subset(Subset::prefix(n).0 & !self.0)
    }

    /// All subsets of `[n]` of the given size, in increasing order of bitmask.
    pub fn all_of_size(n: usize, size: usize) -> Vec<Subset> {
        (1u32..(1u32 << n))
            .filter(|b| b.count_ones() as usize == size)
            .map(Subset)
            .collect()
    }

    /// All nonempty subsets of `[n]`.
    pub fn all_nonempty(n: usize) -> Vec<Subset> {
        (1u32..(1u32 << n)).map(Subset).collect()
    }

    /// Subsets `U` with `self ⊆ U ⊆ upper`.
    pub fn interval(self, upper: Subset) -> Vec<Subset> {
        debug_assert!(self.is_subset_of(upper));
        let free = upper.difference(self).0;
        let mut out = Vec::with_capacity(1 << free.count_ones());
        let mut sub = free;
        loop {
            out.push(Subset(self.0 | sub));
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & free;
        }
        out
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Variable order: `y_S > y_T` if `|S| > |T|`, or `|S| = |T|` and
/// `min(S \ T) < min(T \ S)`.
impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.len().cmp(&other.len()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        let a = self.difference(*other).min().unwrap();
        let b = other.difference(*self).min().unwrap();
        // smaller minimum of the difference means the larger variable
        b.cmp(&a)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> Subset {
        Subset::from_elems(v.iter().copied()).unwrap()
    }

    #[test]
    fn order_for_n3_matches_chain() {
        let mut all = Subset::all_nonempty(3);
        all.sort();
        all.reverse();
        let want = vec![s(&[1, 2, 3]), s(&[1, 2]), s(&[1, 3]), s(&[2, 3]), s(&[1]), s(&[2]), s(&[3])];
        assert_eq!(all, want);
    }

    #[test]
    fn order_examples() {
        assert_eq!(s(&[2, 4]).cmp(&s(&[3, 4])), Ordering::Greater);
        assert_eq!(s(&[2, 4]).cmp(&s(&[2, 4])), Ordering::Equal);
        assert_eq!(s(&[1]).cmp(&s(&[1, 2])), Ordering::Less);
    }

    #[test]
    fn min_max_iter() {
        let a = s(&[3, 5, 9]);
        assert_eq!(a.min(), Some(3));
        assert_eq!(a.max(), Some(9));
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![3, 5, 9]);
        assert_eq!(Subset::prefix(16).len(), 16);
        assert_eq!(Subset::prefix(0), Subset::EMPTY);
        assert_eq!(s(&[1, 2]).interval(s(&[1, 2, 4])).len(), 2);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(Subset::from_elems([0]).is_err());
        assert!(Subset::from_elems([17]).is_err());
    }
}
