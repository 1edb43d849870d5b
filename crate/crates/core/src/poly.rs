//! Sparse polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::monomial::{XMonomial, YMonomial};

/// What a polynomial needs from its monomials.
pub trait Monomial: Clone + Ord + Eq + Hash + fmt::Display {
    fn mul_mono(&self, other: &Self) -> Self;
}

impl Monomial for YMonomial {
    fn mul_mono(&self, other: &Self) -> Self {
        self.mul(other)
    }
}

impl Monomial for XMonomial {
    fn mul_mono(&self, other: &Self) -> Self {
        self.mul(other)
    }
}

/// A finite map from monomials to nonzero rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<M: Monomial> {
    terms: BTreeMap<M, BigRational>,
}

pub type YPoly = Poly<YMonomial>;
pub type XPoly = Poly<XMonomial>;

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl<M: Monomial> Default for Poly<M> {
    fn default() -> Self {
        Poly { terms: BTreeMap::new() }
    }
}

impl<M: Monomial> Poly<M> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: M) -> Self {
        Self::term(m, BigRational::one())
    }

    pub fn term(m: M, c: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn add_term(&mut self, m: M, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &M) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms in decreasing monomial order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&M, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &M> {
        self.terms.keys()
    }

    pub fn leading(&self) -> Option<(&M, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn remove(&mut self, m: &M) -> Option<BigRational> {
        self.terms.remove(m)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn neg(&self) -> Self {
        Poly { terms: self.terms.iter().map(|(m, v)| (m.clone(), -v)).collect() }
    }

    pub fn add_assign_scaled(&mut self, other: &Self, c: &BigRational) {
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut p = self.clone();
        p.add_assign_scaled(other, &BigRational::one());
        p
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut p = self.clone();
        p.add_assign_scaled(other, &-BigRational::one());
        p
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_filtered(other, |_| true)
    }

    /// Product keeping only the monomials accepted by `keep`.
    pub fn mul_filtered<F: Fn(&M) -> bool>(&self, other: &Self, keep: F) -> Self {
        let mut p = Self::zero();
        for (a, u) in &self.terms {
            for (b, v) in &other.terms {
                let m = a.mul_mono(b);
                if keep(&m) {
                    p.add_term(m, u * v);
                }
            }
        }
        p
    }

    pub fn mul_monomial(&self, m: &M) -> Self {
        Poly { terms: self.terms.iter().map(|(a, v)| (a.mul_mono(m), v.clone())).collect() }
    }

    pub fn retain<F: Fn(&M) -> bool>(&mut self, keep: F) {
        self.terms.retain(|m, _| keep(m));
    }

    /// Applies `f` to every monomial, merging collisions.
    pub fn map_monomials<N: Monomial, F: Fn(&M) -> N>(&self, f: F) -> Poly<N> {
        let mut p = Poly::zero();
        for (m, v) in &self.terms {
            p.add_term(f(m), v.clone());
        }
        p
    }

    /// `[{"coeff": "...", "mono": "..."}, ...]` in decreasing monomial order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms_desc()
                .map(|(m, c)| json!({"coeff": c.to_string(), "mono": m.to_string()}))
                .collect(),
        )
    }
}

impl YPoly {
    /// Product in the Stanley-Reisner ring: non-multichain terms vanish.
    pub fn mul_sr(&self, other: &Self) -> Self {
        self.mul_filtered(other, YMonomial::is_multichain)
    }

    pub fn phi(&self, n: usize) -> XPoly {
        self.map_monomials(|m| m.phi(n))
    }
}

impl<M: Monomial> fmt::Display for Poly<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms_desc().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<M: Monomial> fmt::Debug for Poly<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_cancellation() {
        let a = YMonomial::parse("y{1}").unwrap();
        let b = YMonomial::parse("y{2}").unwrap();
        let mut p = YPoly::monomial(a.clone());
        p.add_term(b.clone(), int(-2));
        let q = p.sub(&p);
        assert!(q.is_zero());
        let sq = p.mul(&p);
        assert_eq!(sq.len(), 3);
        // y1*y2 vanishes in the Stanley-Reisner ring
        assert_eq!(p.mul_sr(&p).len(), 2);
        assert_eq!(p.to_string(), "y{1} - 2*y{2}");
    }

    #[test]
    fn json_is_descending() {
        let mut p = XPoly::zero();
        p.add_term(XMonomial::new(vec![0, 1]), int(1));
        p.add_term(XMonomial::new(vec![2, 0]), int(-1));
        let v = p.to_json();
        assert_eq!(v[0]["mono"], "x1^2");
        assert_eq!(v[0]["coeff"], "-1");
    }
}
