//! The ideals `I_{n,k}`, `J_{n,k}` in the x-variables and their
//! Stanley-Reisner counterparts in the y-variables.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{XMonomial, YMonomial};
use crate::poly::{int, XPoly, YPoly};
use crate::subset::{Subset, MAX_N};

/// `R` uses power / chain length `kr + 1`, `S` uses `kr`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, PartialOrd, Ord)]
pub enum Variant {
    R,
    S,
}

impl Variant {
    /// Exponent of the power generators, equal to the forbidden chain length.
    pub fn power(self, k: usize, r: usize) -> usize {
        match self {
            Variant::R => k * r + 1,
            Variant::S => k * r,
        }
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "R" | "r" => Ok(Variant::R),
            "S" | "s" => Ok(Variant::S),
            _ => Err(Error::parse(format!("unknown variant `{s}`"))),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if *self == Variant::R { "R" } else { "S" })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Setting {
    X,
    Y,
}

impl FromStr for Setting {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "x" | "X" => Ok(Setting::X),
            "y" | "Y" => Ok(Setting::Y),
            _ => Err(Error::parse(format!("unknown setting `{s}`"))),
        }
    }
}

impl fmt::Display for Setting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if *self == Setting::X { "x" } else { "y" })
    }
}

/// `θ_i = Σ_{|S| = i} y_S^r`.
pub fn theta(i: usize, n: usize, r: usize) -> Result<YPoly> {
    if i == 0 || i > n || n > MAX_N {
        return Err(Error::domain(format!("theta index {i} outside 1..={n}")));
    }
    let mut p = YPoly::zero();
    for s in Subset::all_of_size(n, i) {
        p.add_term(YMonomial::power(s, r as u32), int(1));
    }
    Ok(p)
}

/// `e_d(x_1^r, ..., x_n^r)`.
pub fn elementary_e(d: usize, n: usize, r: usize) -> Result<XPoly> {
    if d == 0 || d > n || n > MAX_N {
        return Err(Error::domain(format!("elementary index {d} outside 1..={n}")));
    }
    let mut p = XPoly::zero();
    for s in Subset::all_of_size(n, d) {
        p.add_term(XMonomial::subset_power(n, s, r as u32), int(1));
    }
    Ok(p)
}

#[derive(Clone, Debug)]
pub struct XGenerators {
    pub powers: Vec<XMonomial>,
    pub elementary: Vec<XPoly>,
}

impl XGenerators {
    pub fn all(&self) -> Vec<XPoly> {
        self.powers
            .iter()
            .cloned()
            .map(XPoly::monomial)
            .chain(self.elementary.iter().cloned())
            .collect()
    }
}

/// The y-side generators. The monomial families are exposed as lazy
/// iterators since their sizes grow quickly with `n`.
#[derive(Clone, Debug)]
pub struct YGenerators {
    pub n: usize,
    pub chain_length: usize,
    pub thetas: Vec<YPoly>,
}

impl YGenerators {
    /// `y_S y_T` for incomparable `S`, `T`.
    pub fn incomparable_pairs(&self) -> impl Iterator<Item = YMonomial> + '_ {
        let top = 1u32 << self.n;
        (1..top).flat_map(move |a| {
            (a + 1..top).filter_map(move |b| {
                let (s, t) = (Subset::from_bits(a), Subset::from_bits(b));
                s.incomparable(t).then(|| YMonomial::var(s).mul(&YMonomial::var(t)))
            })
        })
    }

    /// Multichain monomials with exactly `chain_length` variables.
    pub fn multichains(&self) -> impl Iterator<Item = YMonomial> {
        MultichainIter::new(self.n, self.chain_length)
    }
}

#[derive(Clone, Debug)]
pub enum IdealGenerators {
    X(XGenerators),
    Y(YGenerators),
}

pub fn ideal_generators(n: usize, k: usize, r: usize, variant: Variant, setting: Setting) -> Result<IdealGenerators> {
    if n == 0 || n > MAX_N || k > n || r == 0 {
        return Err(Error::domain(format!("invalid parameters n={n}, k={k}, r={r}")));
    }
    let p = variant.power(k, r);
    Ok(match setting {
        Setting::X => IdealGenerators::X(XGenerators {
            powers: (1..=n)
                .map(|i| {
                    let mut e = vec![0u32; n];
                    e[i - 1] = p as u32;
                    XMonomial::new(e)
                })
                .collect(),
            elementary: (n - k + 1..=n).map(|d| elementary_e(d, n, r)).collect::<Result<_>>()?,
        }),
        Setting::Y => IdealGenerators::Y(YGenerators {
            n,
            chain_length: p,
            thetas: (n - k + 1..=n).map(|i| theta(i, n, r)).collect::<Result<_>>()?,
        }),
    })
}

/// Depth-first enumeration of multichains `S_1 ⊆ ... ⊆ S_L` of nonempty
/// subsets of `[n]`, one monomial at a time.
pub struct MultichainIter {
    n: usize,
    len: usize,
    // chosen subsets, weakly increasing
    chain: Vec<Subset>,
    // per level: candidate list and next index
    stack: Vec<(Vec<Subset>, usize)>,
    done: bool,
}

impl MultichainIter {
    pub fn new(n: usize, len: usize) -> Self {
        let mut it = MultichainIter { n, len, chain: vec![], stack: vec![], done: false };
        if len > 0 {
            it.stack.push((it.candidates(Subset::EMPTY, true), 0));
        }
        it
    }

    fn candidates(&self, below: Subset, first: bool) -> Vec<Subset> {
        let mut c = below.interval(Subset::prefix(self.n));
        if first {
            c.retain(|s| !s.is_empty());
        }
        c
    }
}

impl Iterator for MultichainIter {
    type Item = YMonomial;
    fn next(&mut self) -> Option<YMonomial> {
        if self.done {
            return None;
        }
        if self.len == 0 {
            self.done = true;
            return Some(YMonomial::one());
        }
        while let Some((cands, idx)) = self.stack.last_mut() {
            if *idx >= cands.len() {
                self.stack.pop();
                self.chain.pop();
                continue;
            }
            let s = cands[*idx];
            *idx += 1;
            if self.chain.len() == self.stack.len() {
                self.chain.pop();
            }
            self.chain.push(s);
            if self.chain.len() == self.len {
                let m = YMonomial::from_pairs(self.chain.iter().map(|&s| (s, 1)));
                return Some(m);
            }
            let next = self.candidates(s, false);
            self.stack.push((next, 0));
        }
        self.done = true;
        None
    }
}

/// Convenience: the explicit x-side generator list, or the y-side list with
/// every monomial family materialized. Meant for small `n`.
pub fn ideal_generator_list(n: usize, k: usize, r: usize, variant: Variant, setting: Setting) -> Result<GeneratorList> {
    Ok(match ideal_generators(n, k, r, variant, setting)? {
        IdealGenerators::X(g) => GeneratorList::X(g.all()),
        IdealGenerators::Y(g) => {
            let mut v: Vec<YPoly> = g.incomparable_pairs().map(YPoly::monomial).collect();
            v.extend(g.thetas.iter().cloned());
            v.extend(g.multichains().unique().map(YPoly::monomial));
            GeneratorList::Y(v)
        }
    })
}

#[derive(Clone, Debug)]
pub enum GeneratorList {
    X(Vec<XPoly>),
    Y(Vec<YPoly>),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::multichains_of_degree;

    #[test]
    fn theta_and_e() {
        let t = theta(3, 3, 2).unwrap();
        assert_eq!(t.to_string(), "y{1,2,3}^2");
        assert_eq!(theta(1, 3, 2).unwrap().len(), 3);
        assert_eq!(theta(2, 5, 1).unwrap().len(), 10);
        assert!(theta(0, 3, 1).is_err());
        assert_eq!(elementary_e(4, 5, 2).unwrap().len(), 5);
        assert_eq!(elementary_e(2, 2, 3).unwrap().to_string(), "x1^3*x2^3");
        assert_eq!(elementary_e(1, 2, 1).unwrap().to_string(), "x1 + x2");
        assert!(elementary_e(3, 2, 1).is_err());
    }

    #[test]
    fn x_generators_small() {
        let IdealGenerators::X(g) = ideal_generators(2, 2, 1, Variant::S, Setting::X).unwrap() else {
            panic!()
        };
        let s: Vec<String> = g.all().iter().map(|p| p.to_string()).collect();
        assert_eq!(s, vec!["x1^2", "x2^2", "x1 + x2", "x1*x2"]);
        let IdealGenerators::X(h) = ideal_generators(2, 2, 1, Variant::R, Setting::X).unwrap() else {
            panic!()
        };
        assert_eq!(h.powers[0].to_string(), "x1^3");
    }

    #[test]
    fn y_generators_lazy() {
        let IdealGenerators::Y(g) = ideal_generators(2, 1, 1, Variant::S, Setting::Y).unwrap() else {
            panic!()
        };
        assert_eq!(g.multichains().count(), 3);
        assert_eq!(g.incomparable_pairs().count(), 1);
        for n in 1..=3 {
            for len in 0..=4 {
                let mut lazy: Vec<YMonomial> = MultichainIter::new(n, len).collect();
                lazy.sort();
                lazy.dedup();
                assert_eq!(lazy.len(), multichains_of_degree(n, len).len(), "n={n} len={len}");
            }
        }
    }
}
