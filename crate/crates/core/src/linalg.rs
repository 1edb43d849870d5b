//! Exact sparse linear algebra: a fraction-free integer echelon form keyed
//! by pivot column, and a reduced row echelon form over the rationals.
//!
//! Columns are indexed so that a smaller index means a larger monomial;
//! the pivot of a row is then its leading monomial.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Sparse integer vector, sorted by column, no zero entries.
pub type SparseVec = Vec<(usize, BigInt)>;

/// Sparse rational vector.
pub type RatVec = BTreeMap<usize, BigRational>;

fn make_primitive(v: &mut SparseVec) {
    let mut g = BigInt::zero();
    for (_, a) in v.iter() {
        g = g.gcd(a);
        if g.is_one() {
            break;
        }
    }
    if v.first().is_some_and(|(_, a)| a.is_negative()) {
        g = -g;
    }
    if !g.is_zero() && !g.is_one() {
        for (_, a) in v.iter_mut() {
            *a /= &g;
        }
    }
}

/// `p·row − a·pivot` where `a` is the row entry at the pivot's column.
fn eliminate(row: &SparseVec, pivot: &SparseVec, a: &BigInt) -> SparseVec {
    let p = &pivot[0].1;
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cj = pivot.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        let (c, v) = if ci < cj {
            i += 1;
            (ci, &row[i - 1].1 * p)
        } else if cj < ci {
            j += 1;
            (cj, -(&pivot[j - 1].1 * a))
        } else {
            i += 1;
            j += 1;
            (ci, &row[i - 1].1 * p - &pivot[j - 1].1 * a)
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    make_primitive(&mut out);
    out
}

/// Row space kept in echelon form with one row per pivot column.
#[derive(Clone, Default, Debug)]
pub struct Echelon {
    pivots: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivots.contains_key(&col)
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, mut row: SparseVec) -> bool {
        row.retain(|(_, a)| !a.is_zero());
        row.sort_by_key(|e| e.0);
        make_primitive(&mut row);
        while let Some((lead, a)) = row.first().cloned() {
            match self.pivots.get(&lead) {
                Some(p) => row = eliminate(&row, p, &a),
                None => {
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
        false
    }

    /// True when `row` lies in the row space.
    pub fn contains(&self, row: &SparseVec) -> bool {
        let mut row = row.clone();
        row.retain(|(_, a)| !a.is_zero());
        row.sort_by_key(|e| e.0);
        while let Some((lead, a)) = row.first().cloned() {
            match self.pivots.get(&lead) {
                Some(p) => row = eliminate(&row, p, &a),
                None => return false,
            }
        }
        true
    }

    /// Unique representative of `v` modulo the row space, supported on
    /// non-pivot columns.
    pub fn normal_form(&self, v: &RatVec) -> RatVec {
        let mut v = v.clone();
        v.retain(|_, a| !a.is_zero());
        let mut out = RatVec::new();
        while let Some((c, a)) = v.pop_first() {
            match self.pivots.get(&c) {
                None => {
                    out.insert(c, a);
                }
                Some(p) => {
                    let f = a / BigRational::from_integer(p[0].1.clone());
                    for (cc, b) in &p[1..] {
                        let e = v.entry(*cc).or_insert_with(BigRational::zero);
                        *e -= &f * BigRational::from_integer(b.clone());
                        if e.is_zero() {
                            v.remove(cc);
                        }
                    }
                }
            }
        }
        out
    }
}

/// Reduced row echelon form over the rationals. Each row has a 1 at its
/// pivot and zeros at every other pivot column.
#[derive(Clone, Default, Debug)]
pub struct Rref {
    rows: BTreeMap<usize, RatVec>,
}

impl Rref {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    fn reduce(&self, v: &RatVec) -> RatVec {
        let mut v = v.clone();
        v.retain(|_, a| !a.is_zero());
        for (pc, row) in &self.rows {
            if let Some(a) = v.get(pc).cloned() {
                for (c, b) in row {
                    let e = v.entry(*c).or_insert_with(BigRational::zero);
                    *e -= &a * b;
                    if e.is_zero() {
                        v.remove(c);
                    }
                }
            }
        }
        v
    }

    /// Adds a vector; returns whether the rank grew.
    pub fn insert(&mut self, v: &RatVec) -> bool {
        let mut w = self.reduce(v);
        let Some((&pc, lead)) = w.iter().next() else {
            return false;
        };
        let inv = lead.recip();
        for a in w.values_mut() {
            *a *= &inv;
        }
        for row in self.rows.values_mut() {
            if let Some(a) = row.get(&pc).cloned() {
                for (c, b) in &w {
                    let e = row.entry(*c).or_insert_with(BigRational::zero);
                    *e -= &a * b;
                    if e.is_zero() {
                        row.remove(c);
                    }
                }
            }
        }
        self.rows.insert(pc, w);
        true
    }

    /// Coordinates of `v` in the row basis (ordered by pivot column), or
    /// `None` when `v` is outside the span.
    pub fn coordinates(&self, v: &RatVec) -> Option<Vec<BigRational>> {
        if !self.reduce(v).is_empty() {
            return None;
        }
        Some(self.rows.keys().map(|pc| v.get(pc).cloned().unwrap_or_else(BigRational::zero)).collect())
    }

    pub fn rows(&self) -> impl Iterator<Item = &RatVec> {
        self.rows.values()
    }
}

pub fn to_rat(v: &SparseVec) -> RatVec {
    v.iter().map(|(c, a)| (*c, BigRational::from_integer(a.clone()))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(v: &[(usize, i64)]) -> SparseVec {
        v.iter().map(|&(c, a)| (c, BigInt::from(a))).collect()
    }

    fn q(a: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(a))
    }

    #[test]
    fn echelon_rank_and_membership() {
        let mut e = Echelon::new();
        assert!(e.insert(sv(&[(0, 2), (1, 4)])));
        assert!(e.insert(sv(&[(0, 1), (2, 1)])));
        assert!(!e.insert(sv(&[(0, 3), (1, 4), (2, 1)])));
        assert_eq!(e.rank(), 2);
        assert_eq!(e.pivot_columns().collect::<Vec<_>>(), vec![0, 1]);
        assert!(e.contains(&sv(&[(1, 2), (2, -1)])));
        assert!(!e.contains(&sv(&[(2, 1)])));
        // x0 ≡ -2 x1 ≡ -x2
        let nf = e.normal_form(&[(0, q(1))].into_iter().collect());
        assert_eq!(nf, [(2, q(-1))].into_iter().collect());
    }

    #[test]
    fn rref_coordinates() {
        let mut r = Rref::new();
        assert!(r.insert(&[(0, q(2)), (1, q(2))].into_iter().collect()));
        assert!(r.insert(&[(1, q(1)), (2, q(1))].into_iter().collect()));
        assert!(!r.insert(&[(0, q(1)), (2, q(-1))].into_iter().collect()));
        let c = r.coordinates(&[(0, q(3)), (1, q(5)), (2, q(2))].into_iter().collect()).unwrap();
        assert_eq!(c, vec![q(3), q(5)]);
        assert!(r.coordinates(&[(2, q(1))].into_iter().collect()).is_none());
    }
}
