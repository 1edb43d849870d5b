//! Monomials in the subset variables `y_S` and in `x_1..x_n`, the monomial
//! orders, multichains, μ-partitions and the transfer map φ.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::subset::{Subset, MAX_N};

/// A monomial `∏ y_S^{e_S}`, stored as (variable, exponent) pairs sorted by
/// decreasing variable. The empty list is the monomial 1.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct YMonomial {
    terms: Vec<(Subset, u32)>,
}

impl YMonomial {
    pub fn one() -> Self {
        YMonomial { terms: Vec::new() }
    }

    pub fn var(s: Subset) -> Self {
        YMonomial::power(s, 1)
    }

    pub fn power(s: Subset, e: u32) -> Self {
        if e == 0 {
            YMonomial::one()
        } else {
            YMonomial { terms: vec![(s, e)] }
        }
    }

    /// Builds from arbitrary pairs, merging repeats and dropping zeros.
    pub fn from_pairs<I: IntoIterator<Item = (Subset, u32)>>(pairs: I) -> Self {
        let mut terms: Vec<(Subset, u32)> = Vec::new();
        for (s, e) in pairs {
            if e == 0 {
                continue;
            }
            match terms.iter_mut().find(|(t, _)| *t == s) {
                Some(t) => t.1 += e,
                None => terms.push((s, e)),
            }
        }
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        YMonomial { terms }
    }

    /// Pairs in decreasing variable order.
    pub fn terms(&self) -> &[(Subset, u32)] {
        &self.terms
    }

    pub fn is_one(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn exponent(&self, s: Subset) -> u32 {
        self.terms.iter().find(|(t, _)| *t == s).map_or(0, |t| t.1)
    }

    /// Number of variables counted with multiplicity.
    pub fn degree(&self) -> usize {
        self.terms.iter().map(|t| t.1 as usize).sum()
    }

    /// `Σ |S| e_S`, the degree of `φ(y)`.
    pub fn deg_tilde(&self) -> usize {
        self.terms.iter().map(|(s, e)| s.len() * *e as usize).sum()
    }

    pub fn mul(&self, other: &YMonomial) -> YMonomial {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let ord = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => b.0.cmp(&a.0),
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (None, None) => unreachable!(),
            };
            match ord {
                Ordering::Less => {
                    terms.push(self.terms[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    terms.push(other.terms[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    terms.push((self.terms[i].0, self.terms[i].1 + other.terms[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        YMonomial { terms }
    }

    pub fn divides(&self, other: &YMonomial) -> bool {
        self.terms.iter().all(|(s, e)| other.exponent(*s) >= *e)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &YMonomial) -> Option<YMonomial> {
        if !other.divides(self) {
            return None;
        }
        let terms = self
            .terms
            .iter()
            .filter_map(|&(s, e)| {
                let f = e - other.exponent(s);
                (f > 0).then_some((s, f))
            })
            .collect();
        Some(YMonomial { terms })
    }

    /// Support subsets are pairwise nested.
    pub fn is_multichain(&self) -> bool {
        // sorted by size first, so a chain must shrink along the list
        self.terms.windows(2).all(|w| w[1].0.len() < w[0].0.len() && w[1].0.is_subset_of(w[0].0))
    }

    /// Sizes of the support subsets, each repeated by its exponent.
    pub fn mu(&self) -> Partition {
        let mut parts = Vec::with_capacity(self.degree());
        for (s, e) in &self.terms {
            parts.extend(std::iter::repeat_n(s.len(), *e as usize));
        }
        Partition::new(parts)
    }

    /// `φ(y) = ∏ x_i` over `i ∈ S` for each factor `y_S`.
    pub fn phi(&self, n: usize) -> XMonomial {
        let mut exps = vec![0u32; n];
        for (s, e) in &self.terms {
            for i in s.iter() {
                exps[i - 1] += e;
            }
        }
        XMonomial { exps }
    }

    /// Applies a permutation of `[n]` (one-line notation, 1-based) to every
    /// subset index.
    pub fn permute(&self, sigma: &[usize]) -> YMonomial {
        YMonomial::from_pairs(self.terms.iter().map(|&(s, e)| (permute_subset(s, sigma), e)))
    }

    /// Parses "y{1,3,4}^7*y{4}^5"; "1" is the unit. Whitespace is ignored.
    pub fn parse(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t == "1" || t.is_empty() {
            return Ok(YMonomial::one());
        }
        let mut pairs = Vec::new();
        for f in t.split('*') {
            let rest = f
                .strip_prefix("y{")
                .ok_or_else(|| Error::parse(format!("bad y-factor `{f}`")))?;
            let (set, exp) = rest
                .split_once('}')
                .ok_or_else(|| Error::parse(format!("bad y-factor `{f}`")))?;
            let elems = set
                .split(',')
                .map(|e| e.parse::<usize>().map_err(|_| Error::parse(format!("bad element in `{f}`"))))
                .collect::<Result<Vec<_>>>()?;
            let e = parse_exponent(exp, f)?;
            let sub = Subset::from_elems(elems)?;
            if sub.is_empty() {
                return Err(Error::parse(format!("empty subset in `{f}`")));
            }
            pairs.push((sub, e));
        }
        Ok(YMonomial::from_pairs(pairs))
    }

    /// Largest support element, used to check a monomial lives over `[n]`.
    pub fn max_letter(&self) -> usize {
        self.terms.iter().filter_map(|&(s, _)| Subset::max(s)).max().unwrap_or(0)
    }
}

fn parse_exponent(exp: &str, f: &str) -> Result<u32> {
    if exp.is_empty() {
        return Ok(1);
    }
    exp.strip_prefix('^')
        .and_then(|e| e.parse::<u32>().ok())
        .ok_or_else(|| Error::parse(format!("bad exponent in `{f}`")))
}

pub fn permute_subset(s: Subset, sigma: &[usize]) -> Subset {
    s.iter().fold(Subset::EMPTY, |acc, i| acc.insert(sigma[i - 1]))
}

impl PartialOrd for YMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Graded lexicographic order: total degree, then exponents read along
/// decreasing variables.
impl Ord for YMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        for (a, b) in self.terms.iter().zip(&other.terms) {
            if a.0 != b.0 {
                return a.0.cmp(&b.0);
            }
            if a.1 != b.1 {
                return a.1.cmp(&b.1);
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

/// Same as the `Ord` instance; spelled out for callers.
pub fn compare_ymonomials(a: &YMonomial, b: &YMonomial) -> Ordering {
    a.cmp(b)
}

/// Same as the `Ord` instance on [`Subset`].
pub fn compare_yvars(s: Subset, t: Subset) -> Ordering {
    s.cmp(&t)
}

impl fmt::Display for YMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "1");
        }
        for (i, (s, e)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "y{s}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for YMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A monomial `x_1^{a_1} ... x_n^{a_n}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct XMonomial {
    exps: Vec<u32>,
}

impl XMonomial {
    pub fn one(n: usize) -> Self {
        XMonomial { exps: vec![0; n] }
    }

    pub fn new(exps: Vec<u32>) -> Self {
        XMonomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i - 1]
    }

    pub fn mul(&self, other: &XMonomial) -> XMonomial {
        XMonomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    pub fn divides(&self, other: &XMonomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &XMonomial) -> Option<XMonomial> {
        other
            .divides(self)
            .then(|| XMonomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect() })
    }

    /// `∏_{i ∈ S} x_i^e`.
    pub fn subset_power(n: usize, s: Subset, e: u32) -> XMonomial {
        XMonomial { exps: (1..=n).map(|i| if s.contains(i) { e } else { 0 }).collect() }
    }

    /// The unique multichain `y` with `φ(y) = self`: `S_j = {i : a_i ≥ j}`.
    pub fn multichain_preimage(&self) -> YMonomial {
        let top = self.exps.iter().copied().max().unwrap_or(0);
        let pairs = (1..=top).map(|j| {
            let s = (0..self.exps.len())
                .filter(|&i| self.exps[i] >= j)
                .fold(Subset::EMPTY, |acc, i| acc.insert(i + 1));
            (s, 1)
        });
        YMonomial::from_pairs(pairs)
    }

    /// `μ` of the multichain preimage: the conjugate of the sorted exponents.
    pub fn mu(&self) -> Partition {
        Partition::new(self.exps.iter().map(|&e| e as usize).collect()).conjugate()
    }

    /// `σ · x^a` where `σ` sends `x_i` to `x_{σ(i)}`.
    pub fn permute(&self, sigma: &[usize]) -> XMonomial {
        let mut exps = vec![0; self.exps.len()];
        for (i, &e) in self.exps.iter().enumerate() {
            exps[sigma[i] - 1] = e;
        }
        XMonomial { exps }
    }

    /// Parses "x4^21*x3^20*x8"; "1" is the unit.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut exps = vec![0u32; n];
        if t == "1" || t.is_empty() {
            return Ok(XMonomial { exps });
        }
        for f in t.split('*') {
            let rest = f.strip_prefix('x').ok_or_else(|| Error::parse(format!("bad x-factor `{f}`")))?;
            let (idx, exp) = match rest.find('^') {
                Some(p) => (&rest[..p], &rest[p..]),
                None => (rest, ""),
            };
            let i: usize = idx.parse().map_err(|_| Error::parse(format!("bad index in `{f}`")))?;
            if i == 0 || i > n {
                return Err(Error::parse(format!("index {i} outside [1,{n}]")));
            }
            exps[i - 1] += parse_exponent(exp, f)?;
        }
        Ok(XMonomial { exps })
    }
}

impl PartialOrd for XMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Graded lexicographic order with `x_1 > x_2 > ... > x_n`.
impl Ord for XMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl fmt::Display for XMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut idx: Vec<usize> = (0..self.exps.len()).filter(|&i| self.exps[i] > 0).collect();
        if idx.is_empty() {
            return write!(f, "1");
        }
        idx.sort_by(|&a, &b| self.exps[b].cmp(&self.exps[a]).then(a.cmp(&b)));
        for (j, i) in idx.into_iter().enumerate() {
            if j > 0 {
                write!(f, "*")?;
            }
            write!(f, "x{}", i + 1)?;
            if self.exps[i] > 1 {
                write!(f, "^{}", self.exps[i])?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for XMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Repeatedly replaces an incomparable pair `y_A y_B` by `y_{A∪B} y_{A∩B}`
/// (dropping an empty intersection), always choosing the first incomparable
/// pair in decreasing variable order.
pub fn straighten(y: &YMonomial) -> YMonomial {
    straighten_with(y, |pairs| pairs[0])
}

/// Straightening with a caller-chosen pair at each step; `choose` receives
/// the list of incomparable support pairs.
pub fn straighten_with<F>(y: &YMonomial, mut choose: F) -> YMonomial
where
    F: FnMut(&[(Subset, Subset)]) -> (Subset, Subset),
{
    let mut cur = y.clone();
    loop {
        let t = cur.terms();
        let mut pairs = Vec::new();
        for i in 0..t.len() {
            for j in i + 1..t.len() {
                if t[i].0.incomparable(t[j].0) {
                    pairs.push((t[i].0, t[j].0));
                }
            }
        }
        if pairs.is_empty() {
            return cur;
        }
        let (a, b) = choose(&pairs);
        let pair = YMonomial::var(a).mul(&YMonomial::var(b));
        let mut rest = cur.div(&pair).expect("pair divides");
        rest = rest.mul(&YMonomial::var(a.union(b)));
        let meet = a.intersection(b);
        if !meet.is_empty() {
            rest = rest.mul(&YMonomial::var(meet));
        }
        cur = rest;
    }
}

/// All multichain monomials over `[n]` with exactly `degree` variables.
pub fn multichains_of_degree(n: usize, degree: usize) -> Vec<YMonomial> {
    let mut out = Vec::new();
    let mut cur: Vec<(Subset, u32)> = Vec::new();
    fn rec(n: usize, left: usize, below: Subset, cur: &mut Vec<(Subset, u32)>, out: &mut Vec<YMonomial>) {
        if left == 0 {
            out.push(YMonomial::from_pairs(cur.iter().copied()));
            return;
        }
        let full = Subset::prefix(n);
        if below == full {
            return;
        }
        for s in below.interval(full) {
            if s == below {
                continue;
            }
            for e in 1..=left {
                cur.push((s, e as u32));
                rec(n, left - e, s, cur, out);
                cur.pop();
            }
        }
    }
    rec(n, degree, Subset::EMPTY, &mut cur, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// All multichain monomials with the given μ.
pub fn multichains_with_mu(n: usize, mu: &Partition) -> Vec<YMonomial> {
    // distinct sizes ascending, with multiplicities
    let mut sizes: Vec<(usize, u32)> = Vec::new();
    for &p in mu.parts().iter().rev() {
        match sizes.last_mut() {
            Some(last) if last.0 == p => last.1 += 1,
            _ => sizes.push((p, 1)),
        }
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        n: usize,
        sizes: &[(usize, u32)],
        below: Subset,
        cur: &mut Vec<(Subset, u32)>,
        out: &mut Vec<YMonomial>,
    ) {
        let Some(&(size, e)) = sizes.first() else {
            out.push(YMonomial::from_pairs(cur.iter().copied()));
            return;
        };
        let free: Vec<usize> = (1..=n).filter(|&i| !below.contains(i)).collect();
        let need = size - below.len();
        for add in itertools::Itertools::combinations(free.into_iter(), need) {
            let s = add.into_iter().fold(below, |acc, i| acc.insert(i));
            cur.push((s, e));
            rec(n, &sizes[1..], s, cur, out);
            cur.pop();
        }
    }
    if mu.largest() > n || n > MAX_N {
        return out;
    }
    rec(n, &sizes, Subset::EMPTY, &mut cur, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// All monomials in `x_1..x_n` of the given degree with every exponent
/// below `bound`.
pub fn x_monomials_in_box(n: usize, degree: usize, bound: u32) -> Vec<XMonomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, left: usize, bound: u32, cur: &mut Vec<u32>, out: &mut Vec<XMonomial>) {
        let n = cur.len();
        if i == n {
            if left == 0 {
                out.push(XMonomial::new(cur.clone()));
            }
            return;
        }
        let rest_cap = (n - i - 1) * bound.saturating_sub(1) as usize;
        let hi = (bound.saturating_sub(1) as usize).min(left);
        for e in 0..=hi {
            if left - e > rest_cap {
                continue;
            }
            cur[i] = e as u32;
            rec(i + 1, left - e, bound, cur, out);
        }
        cur[i] = 0;
    }
    if bound > 0 {
        rec(0, degree, bound, &mut cur, &mut out);
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(s: &str) -> YMonomial {
        YMonomial::parse(s).unwrap()
    }

    #[test]
    fn parse_and_print() {
        let m = y("y{4}^5 * y{1,3,4}^7");
        assert_eq!(m.to_string(), "y{1,3,4}^7*y{4}^5");
        assert_eq!(y("1"), YMonomial::one());
        let x = XMonomial::parse("x4^21*x3^20*x8", 9).unwrap();
        assert_eq!(x.to_string(), "x4^21*x3^20*x8");
        assert!(YMonomial::parse("y{}").is_err());
        assert!(XMonomial::parse("x0", 3).is_err());
    }

    #[test]
    fn multichain_checks() {
        assert!(y("y{4}*y{2,4,5}^3*y{2,3,4,5}*y{1,2,3,4,5}").is_multichain());
        assert!(!y("y{1}*y{2}").is_multichain());
        assert!(YMonomial::one().is_multichain());
        assert!(!y("y{1,2}*y{1,3}").is_multichain());
    }

    #[test]
    fn mu_examples() {
        let m = y("y{4}^5*y{1,3,4}^7*y{1,2,3,4,6}*y{1,2,3,4,5,6}^4");
        assert_eq!(m.mu(), Partition::new(vec![6, 6, 6, 6, 5, 3, 3, 3, 3, 3, 3, 3, 1, 1, 1, 1, 1]));
        assert_eq!(YMonomial::one().mu(), Partition::empty());
        assert_eq!(XMonomial::new(vec![1, 1, 1]).mu(), Partition::new(vec![3]));
    }

    #[test]
    fn preimage_example() {
        let x = XMonomial::parse("x5^7*x2^4*x1^2*x3^2", 5).unwrap();
        assert_eq!(x.multichain_preimage(), y("y{5}^3*y{2,5}^2*y{1,2,3,5}^2"));
        assert_eq!(XMonomial::one(3).multichain_preimage(), YMonomial::one());
        assert_eq!(x.multichain_preimage().phi(5), x);
    }

    #[test]
    fn straighten_examples() {
        assert_eq!(straighten(&y("y{1}*y{2}")), y("y{1,2}"));
        assert_eq!(straighten(&y("y{1,2}*y{2,3}")), y("y{1,2,3}*y{2}"));
        let c = y("y{4}*y{2,4}");
        assert_eq!(straighten(&c), c);
    }

    #[test]
    fn order_examples() {
        assert!(YMonomial::one() < y("y{3}"));
        assert!(y("y{1,2,3}^2") < y("y{3}^3"));
        assert!(y("y{1,2}*y{3}") > y("y{1,3}*y{2}"));
    }

    #[test]
    fn enumerators() {
        // chains of two variables over [2]: y1y12, y2y12 and squares
        assert_eq!(multichains_of_degree(2, 1).len(), 3);
        assert_eq!(multichains_of_degree(2, 2).len(), 5);
        assert_eq!(multichains_with_mu(3, &Partition::new(vec![2, 1])).len(), 6);
        assert_eq!(x_monomials_in_box(3, 2, 2).len(), 3);
    }
}
