//! Integer partitions, the dominance order, and small enumeration helpers.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing list of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

/// The partition attached to a monomial by its subset sizes.
pub type MuPartition = Partition;

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Accepts only input that is already weakly decreasing and positive.
    pub fn from_decreasing(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn largest(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.largest();
        Partition((1..=m).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// Dominance comparison. `None` means incomparable; partitions of
    /// different sizes are rejected.
    pub fn dominance_cmp(&self, other: &Partition) -> Result<Option<Ordering>> {
        if self.size() != other.size() {
            return Err(Error::domain(format!(
                "dominance compares partitions of equal size, got {self} and {other}"
            )));
        }
        let len = self.len().max(other.len());
        let (mut sa, mut sb) = (0usize, 0usize);
        let (mut ge, mut le) = (true, true);
        for i in 0..len {
            sa += self.0.get(i).copied().unwrap_or(0);
            sb += other.0.get(i).copied().unwrap_or(0);
            if sa < sb {
                ge = false;
            }
            if sa > sb {
                le = false;
            }
        }
        Ok(match (ge, le) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Greater),
            (false, true) => Some(Ordering::Less),
            (false, false) => None,
        })
    }

    /// `self ⊵ other`.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        Ok(matches!(
            self.dominance_cmp(other)?,
            Some(Ordering::Greater) | Some(Ordering::Equal)
        ))
    }

    /// `self ▷ other`.
    pub fn strictly_dominates(&self, other: &Partition) -> Result<bool> {
        Ok(self.dominance_cmp(other)? == Some(Ordering::Greater))
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill_partitions(n, n, usize::MAX, &mut cur, &mut out);
        out
    }

    /// All partitions with at most `max_parts` parts, each at most `max_part`
    /// (the empty partition included), in increasing lexicographic order of
    /// the part list.
    pub fn in_box(max_parts: usize, max_part: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(max_parts: usize, bound: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition(cur.clone()));
            if cur.len() == max_parts {
                return;
            }
            for p in 1..=bound {
                cur.push(p);
                rec(max_parts, p, cur, out);
                cur.pop();
            }
        }
        rec(max_parts, max_part, &mut cur, &mut out);
        out.sort();
        out
    }

    /// Parses "(3,2,1)", "3,2,1" or "()" / "".
    pub fn parse(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let t = t.trim_start_matches('(').trim_end_matches(')');
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|p| p.parse::<usize>().map_err(|_| Error::parse(format!("bad part `{p}`"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::from_decreasing(parts)
    }
}

fn fill_partitions(n: usize, max: usize, limit: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    if cur.len() == limit {
        return;
    }
    for p in (1..=max.min(n)).rev() {
        cur.push(p);
        fill_partitions(n - p, p, limit, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn dominance_basics() {
        assert!(p(&[5, 5, 1, 1, 1, 1, 1]).strictly_dominates(&p(&[4, 4, 2, 2, 1, 1, 1])).unwrap());
        assert!(p(&[5, 5, 2, 2, 1]).strictly_dominates(&p(&[4, 4, 2, 2, 1, 1, 1])).unwrap());
        assert_eq!(p(&[3, 1, 1, 1]).dominance_cmp(&p(&[2, 2, 2])).unwrap(), None);
        assert!(p(&[2]).dominance_cmp(&p(&[1])).is_err());
    }

    #[test]
    fn counts_and_conjugate() {
        assert_eq!(Partition::all_of(5).len(), 7);
        assert_eq!(Partition::all_of(0), vec![Partition::empty()]);
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        // 2x2 box holds 6 partitions
        assert_eq!(Partition::in_box(2, 2).len(), 6);
    }

    #[test]
    fn parse_round_trip() {
        let a = p(&[3, 2, 2]);
        assert_eq!(Partition::parse(&a.to_string()).unwrap(), a);
        assert_eq!(Partition::parse("()").unwrap(), Partition::empty());
        assert!(Partition::parse("(1,2)").is_err());
    }
}
