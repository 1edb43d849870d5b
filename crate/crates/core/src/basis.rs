//! Garsia-Stanton type monomials in both variable families, the
//! multichain <-> (g, d) bijection, the standard-monomial test,
//! admissibility, and basis enumeration.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::combinatorics::{enumerate_faces, enumerate_osp, enumerate_words, ColoredWord, Face, Osp};
use crate::error::{Error, Result};
use crate::ideal::{theta, Variant};
use crate::monomial::{multichains_of_degree, XMonomial, YMonomial};
use crate::partition::Partition;
use crate::poly::YPoly;
use crate::subset::Subset;

/// Prefix sets `T_i = {g_1, ..., g_i}` of a word.
fn prefix_sets(g: &ColoredWord) -> Vec<Subset> {
    let mut acc = Subset::EMPTY;
    g.letters()
        .iter()
        .map(|l| {
            acc = acc.insert(l.letter);
            acc
        })
        .collect()
}

/// The exponents `m_i` of `tilde_b_g` on the prefix sets.
pub fn m_exponents(g: &ColoredWord) -> Vec<u32> {
    let c = g.colors();
    let r = g.r();
    let len = g.len();
    (1..=len)
        .map(|i| {
            if i == len {
                c[i - 1] as u32
            } else {
                let base = c[i - 1] as i64 - c[i] as i64;
                (base + if g.is_descent(i) { r as i64 } else { 0 }) as u32
            }
        })
        .collect()
}

/// `tilde_b_g = ∏ y_{T_i}^{m_i}`. Words without full support use their own
/// prefix sets.
pub fn tilde_b(g: &ColoredWord) -> YMonomial {
    YMonomial::from_pairs(prefix_sets(g).into_iter().zip(m_exponents(g)))
}

/// `tilde_b_g · ∏ y_{T_i}^{r d_i}`; missing trailing entries of `d` are 0.
pub fn tilde_b_gd(g: &ColoredWord, d: &[u32]) -> Result<YMonomial> {
    if d.len() > g.len() {
        return Err(Error::domain(format!("d has {} entries for a word of length {}", d.len(), g.len())));
    }
    let r = g.r() as u32;
    let extra = prefix_sets(g).into_iter().zip(d.iter().map(|&di| r * di));
    Ok(tilde_b(g).mul(&YMonomial::from_pairs(extra)))
}

/// A colored word together with a vector `d` of nonnegative integers.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GdPair {
    pub word: ColoredWord,
    pub d: Vec<u32>,
}

impl fmt::Display for GdPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d: Vec<String> = self.d.iter().map(u32::to_string).collect();
        write!(f, "({}; {})", self.word, d.join(","))
    }
}

/// Inverts [`tilde_b_gd`] on multichain monomials over `[n]`.
pub fn gd_from_multichain(y: &YMonomial, n: usize, r: usize) -> Result<GdPair> {
    if !y.is_multichain() {
        return Err(Error::NotAMultichain(y.to_string()));
    }
    if y.max_letter() > n {
        return Err(Error::domain(format!("{y} is not a monomial over [{n}]")));
    }
    // chain in increasing order
    let chain: Vec<(Subset, u32)> = y.terms().iter().rev().copied().collect();
    let full = Subset::prefix(n);
    let mut blocks: Vec<Subset> = Vec::new();
    let mut prev = Subset::EMPTY;
    for (s, _) in &chain {
        blocks.push(s.difference(prev));
        prev = *s;
    }
    let top_is_full = prev == full;
    if !top_is_full {
        blocks.push(full.difference(prev));
    }
    // block colors by backward induction modulo r
    let j = chain.len();
    let mut colors = vec![0usize; blocks.len()];
    let r64 = r as u64;
    if j > 0 {
        let mut next = if top_is_full {
            colors[j - 1] = (chain[j - 1].1 as u64 % r64) as usize;
            colors[j - 1]
        } else {
            colors[j] = 0;
            0
        };
        let start = if top_is_full { j - 1 } else { j };
        for t in (0..start).rev() {
            let c = ((chain[t].1 as u64 + next as u64) % r64) as usize;
            colors[t] = c;
            next = c;
        }
    }
    let mut perm = Vec::with_capacity(n);
    let mut cols = Vec::with_capacity(n);
    for (b, &c) in blocks.iter().zip(&colors) {
        for e in b.iter() {
            perm.push(e);
            cols.push(c);
        }
    }
    let word = ColoredWord::from_parts(&perm, &cols, n, r)?;
    let m = m_exponents(&word);
    let mut d = vec![0u32; n];
    for (s, a) in &chain {
        let i = s.len();
        let mi = m[i - 1];
        if *a < mi || !(*a - mi).is_multiple_of(r as u32) {
            return Err(Error::Certification(format!("no (g,d) for {y}: exponent {a} vs {mi}")));
        }
        d[i - 1] = (*a - mi) / r as u32;
    }
    let back = tilde_b_gd(&word, &d)?;
    if &back != y {
        return Err(Error::Certification(format!("reconstruction of {y} produced {back}")));
    }
    Ok(GdPair { word, d })
}

/// `b_g = ∏ x_{π_i}^{r d_i(g) + c_i}` with `d_i(g)` the number of descents
/// at or after position `i`.
pub fn b_g(g: &ColoredWord) -> XMonomial {
    let n = g.n();
    let r = g.r() as u32;
    let des = g.descent_set();
    let mut exps = vec![0u32; n];
    for (i, l) in g.letters().iter().enumerate() {
        let di = des.iter().filter(|&&j| j > i).count() as u32;
        exps[l.letter - 1] = r * di + l.color as u32;
    }
    XMonomial::new(exps)
}

/// `i_j = #{m : λ_m ≥ j}`.
fn lambda_column_counts(lambda: &Partition, len: usize) -> Vec<u32> {
    (1..=len).map(|j| lambda.parts().iter().filter(|&&p| p >= j).count() as u32).collect()
}

/// `b_(g,λ) = b_g · ∏ x_{π_j}^{r i_j}` for a word on any support.
fn b_word_lambda(g: &ColoredWord, lambda: &Partition) -> XMonomial {
    let r = g.r() as u32;
    let mut exps = b_g(g).exps().to_vec();
    for (j, i) in lambda_column_counts(lambda, g.len()).into_iter().enumerate() {
        exps[g.letters()[j].letter - 1] += r * i;
    }
    XMonomial::new(exps)
}

pub fn b_osp(p: &Osp) -> XMonomial {
    b_word_lambda(p.word(), p.lambda())
}

/// `tilde_b_g · ∏ y_{S_i}^r` where `S_i` is the prefix of length `λ_i`.
fn tilde_b_word_lambda(g: &ColoredWord, lambda: &Partition) -> YMonomial {
    let pre = prefix_sets(g);
    let r = g.r() as u32;
    tilde_b(g).mul(&YMonomial::from_pairs(lambda.parts().iter().map(|&l| (pre[l - 1], r))))
}

pub fn tilde_b_osp(p: &Osp) -> YMonomial {
    tilde_b_word_lambda(p.word(), p.lambda())
}

/// `y_Z^{kr - deg} · ∏ y_{S ∪ Z}` over the factors `y_S` of `tilde_b_(g,λ)`;
/// for `Z = ∅` this is `tilde_b_(g,λ)`.
pub fn tilde_b_face(f: &Face, k: usize) -> Result<YMonomial> {
    let base = tilde_b_word_lambda(f.word(), f.lambda());
    let z = f.zero();
    if z.is_empty() {
        return Ok(base);
    }
    let kr = k * f.word().r();
    let deg = base.degree();
    if deg > kr {
        return Err(Error::InvalidFace(format!("degree {deg} of the colored part exceeds kr = {kr}")));
    }
    let lifted = YMonomial::from_pairs(base.terms().iter().map(|&(s, e)| (s.union(z), e)));
    Ok(lifted.mul(&YMonomial::power(z, (kr - deg) as u32)))
}

/// `∏_{i ∈ Z} x_i^{kr} · b_(g,λ)`.
pub fn b_face(f: &Face, k: usize) -> XMonomial {
    let n = f.word().n();
    let kr = (k * f.word().r()) as u32;
    b_word_lambda(f.word(), f.lambda()).mul(&XMonomial::subset_power(n, f.zero(), kr))
}

/// Which forbidden pattern (numbered 1 to 7) a monomial contains, if any.
pub fn forbidden_pattern(y: &YMonomial, n: usize, k: usize, r: usize, variant: Variant) -> Option<u8> {
    if !y.is_multichain() {
        return Some(1);
    }
    let r32 = r as u32;
    let thr = n + 1 - k;
    let chain: Vec<(Subset, u32)> = y.terms().iter().rev().copied().collect();
    for &(s, t) in &chain {
        if s.len() >= thr && t >= r32 && s == Subset::prefix(s.len()) {
            return Some(2);
        }
    }
    for &(s, t) in &chain {
        if s.len() >= thr && t > r32 {
            return Some(3);
        }
    }
    let u = chain.len();
    for a in 0..u {
        for b in a + 1..u {
            let (s, ts) = chain[a];
            let (t, tt) = chain[b];
            let diff = t.difference(s);
            if ts >= r32 && s.len() >= thr && diff.min() > s.max() {
                return Some(4);
            }
            if tt >= r32 && t.len() >= thr && Subset::prefix(diff.max().unwrap()).is_subset_of(t) {
                return Some(5);
            }
        }
    }
    for a in 0..u {
        for b in a + 1..u {
            for c in b + 1..u {
                let (s1, _) = chain[a];
                let (s2, t2) = chain[b];
                let (s3, _) = chain[c];
                if t2 >= r32 && s2.len() >= thr && s2.difference(s1).max() < s3.difference(s2).min() {
                    return Some(6);
                }
            }
        }
    }
    if y.degree() >= variant.power(k, r) {
        return Some(7);
    }
    None
}

/// True when `y` is divisible by none of the forbidden monomials.
pub fn is_standard_monomial(y: &YMonomial, n: usize, k: usize, r: usize, variant: Variant) -> bool {
    forbidden_pattern(y, n, k, r, variant).is_none()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Admissibility {
    Admissible,
    SemiAdmissible,
    NonAdmissible,
}

pub fn classify_mu(mu: &Partition, n: usize, k: usize, r: usize, variant: Variant) -> Result<Admissibility> {
    if mu.largest() > n {
        return Err(Error::domain(format!("{mu} has a part above n = {n}")));
    }
    if mu.len() >= variant.power(k, r) || mu.multiplicity(n) >= r {
        return Ok(Admissibility::NonAdmissible);
    }
    if (n + 1 - k..n).any(|i| i >= 1 && mu.multiplicity(i) > r) {
        return Ok(Admissibility::SemiAdmissible);
    }
    Ok(Admissibility::Admissible)
}

/// The object indexing a basis element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum IndexObject {
    Osp(Osp),
    Face(Face),
}

impl fmt::Display for IndexObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexObject::Osp(p) => write!(f, "{p}"),
            IndexObject::Face(x) => write!(f, "{x}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct BasisElement {
    pub index: IndexObject,
    pub y: YMonomial,
    pub x: XMonomial,
    pub degree: usize,
    pub comaj: usize,
}

/// Basis of `𝓢_{n,k}` (variant S) or `𝓡_{n,k}` (variant R), in decreasing
/// monomial order. Three independent constructions are compared: the image
/// of the index set, the degree-bounded `(g,d)` monomials, and the
/// multichains avoiding every forbidden pattern.
pub fn enumerate_basis(n: usize, k: usize, r: usize, variant: Variant) -> Result<Vec<BasisElement>> {
    let elements = basis_from_index_set(n, k, r, variant)?;
    let a: BTreeSet<YMonomial> = elements.iter().map(|e| e.y.clone()).collect();
    if a.len() != elements.len() {
        return Err(Error::Certification("index map is not injective".into()));
    }
    let b = basis_from_gd(n, k, r, variant)?;
    let c = basis_from_standard(n, k, r, variant);
    for (name, other) in [("(g,d) route", &b), ("standard-monomial route", &c)] {
        if let Some(m) = a.symmetric_difference(other).next() {
            return Err(Error::Certification(format!(
                "{name} disagrees with the index set at {m} (n={n}, k={k}, r={r}, {variant})"
            )));
        }
    }
    Ok(elements)
}

/// Route one: images of OSPs (S) or faces (R).
pub fn basis_from_index_set(n: usize, k: usize, r: usize, variant: Variant) -> Result<Vec<BasisElement>> {
    let mut out = Vec::new();
    match variant {
        Variant::S => {
            for p in enumerate_osp(n, k, r)? {
                let y = tilde_b_osp(&p);
                out.push(BasisElement { x: b_osp(&p), degree: y.degree(), comaj: p.comaj(), y, index: IndexObject::Osp(p) });
            }
        }
        Variant::R => {
            for f in enumerate_faces(n, k, r)? {
                let y = tilde_b_face(&f, k)?;
                out.push(BasisElement {
                    x: b_face(&f, k),
                    degree: y.degree(),
                    comaj: f.comaj(k),
                    y,
                    index: IndexObject::Face(f),
                });
            }
        }
    }
    out.sort_by(|a, b| b.y.cmp(&a.y));
    Ok(out)
}

/// Route two: `tilde_b_(g,d)` with `d` supported on `1..n-k` and degree
/// below the chain length.
pub fn basis_from_gd(n: usize, k: usize, r: usize, variant: Variant) -> Result<BTreeSet<YMonomial>> {
    let p = variant.power(k, r);
    let mut out = BTreeSet::new();
    for g in enumerate_words(n, r)? {
        let base = g.colors()[0] + r * g.des();
        if base >= p {
            continue;
        }
        // Σd ≤ budget keeps the degree below p
        let budget = (p - 1 - base) / r;
        for d in vectors_with_sum_at_most(n - k, budget) {
            out.insert(tilde_b_gd(&g, &d)?);
        }
    }
    Ok(out)
}

/// Route three: multichains of degree below the chain length that pass the
/// standard-monomial test.
pub fn basis_from_standard(n: usize, k: usize, r: usize, variant: Variant) -> BTreeSet<YMonomial> {
    let p = variant.power(k, r);
    (0..p)
        .flat_map(|d| multichains_of_degree(n, d))
        .filter(|y| is_standard_monomial(y, n, k, r, variant))
        .collect()
}

/// All vectors of `len` nonnegative integers with sum at most `budget`.
pub fn vectors_with_sum_at_most(len: usize, budget: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; len];
    fn rec(i: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur[i] = v as u32;
            rec(i + 1, left - v, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, budget, &mut cur, &mut out);
    out
}

/// `θ_{n-k+1}^{d_{n-k+1}} ⋯ θ_n^{d_n} · tilde_b_(g,(d_1..d_{n-k},0..0))`
/// expanded in the Stanley-Reisner ring.
pub fn tilde_b_prime(p: &GdPair, k: usize) -> Result<YPoly> {
    let n = p.word.n();
    let r = p.word.r();
    if p.d.len() != n || !p.word.is_full() {
        return Err(Error::domain("tilde_b_prime needs a full word and d of length n"));
    }
    let mut low = p.d.clone();
    for v in low.iter_mut().skip(n - k) {
        *v = 0;
    }
    let mut poly = YPoly::monomial(tilde_b_gd(&p.word, &low)?);
    for i in n - k + 1..=n {
        let th = theta(i, n, r)?;
        for _ in 0..p.d[i - 1] {
            poly = poly.mul_sr(&th);
        }
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::count_osp;

    fn w(s: &str, n: usize, r: usize) -> ColoredWord {
        ColoredWord::parse(s, n, r).unwrap()
    }

    fn y(s: &str) -> YMonomial {
        YMonomial::parse(s).unwrap()
    }

    #[test]
    fn tilde_b_example() {
        let g = w("4^0 2^2 5^2 3^2 1^1", 5, 3);
        assert_eq!(tilde_b(&g), y("y{4}*y{2,4,5}^3*y{2,3,4,5}*y{1,2,3,4,5}"));
        assert_eq!(tilde_b(&ColoredWord::identity(4, 3)), YMonomial::one());
        assert_eq!(tilde_b(&g).degree(), (3 * 2));
    }

    #[test]
    fn gd_example_both_ways() {
        let g = w("4^2 1^0 3^0 2^2 6^2 5^1", 6, 3);
        let d = [1, 0, 2, 0, 0, 1];
        let m = y("y{4}^5*y{1,3,4}^7*y{1,2,3,4,6}*y{1,2,3,4,5,6}^4");
        assert_eq!(tilde_b_gd(&g, &d).unwrap(), m);
        let back = gd_from_multichain(&m, 6, 3).unwrap();
        assert_eq!(back.word, g);
        assert_eq!(back.d, d.to_vec());
        let one = gd_from_multichain(&YMonomial::one(), 3, 2).unwrap();
        assert_eq!(one.word, ColoredWord::identity(3, 2));
        assert!(matches!(gd_from_multichain(&y("y{1}*y{2}"), 2, 1), Err(Error::NotAMultichain(_))));
    }

    #[test]
    fn descent_monomials_worked_example() {
        let p = Osp::parse("(4^3 2^2 3^2 9^1 6^1 1^0 5^2 7^2 8^1; 3,2)", 9, 5, 4).unwrap();
        let bg = b_g(p.word());
        assert_eq!(bg.to_string(), "x4^11*x2^10*x3^10*x9^9*x6^5*x1^4*x5^2*x7^2*x8");
        let bl = b_osp(&p);
        assert_eq!(bl.to_string(), "x4^19*x2^18*x3^14*x9^9*x6^5*x1^4*x5^2*x7^2*x8");
        assert_eq!(tilde_b_osp(&p).phi(9), bl);
        assert_eq!(tilde_b_osp(&p).deg_tilde(), p.comaj());
    }

    #[test]
    fn admissibility_examples() {
        let c = |v: Vec<usize>, var| classify_mu(&Partition::new(v), 6, 3, 2, var).unwrap();
        use Admissibility::*;
        for var in [Variant::S, Variant::R] {
            assert_eq!(c(vec![5, 5, 2, 2, 2], var), Admissible);
            assert_eq!(c(vec![6, 5, 5, 5, 1], var), SemiAdmissible);
            assert_eq!(c(vec![6, 5, 4, 4, 2, 2, 2, 1], var), NonAdmissible);
            assert_eq!(c(vec![6, 6, 2], var), NonAdmissible);
        }
        assert_eq!(c(vec![6, 5, 5, 2, 2, 2], Variant::S), NonAdmissible);
        assert_eq!(c(vec![6, 5, 5, 2, 2, 2], Variant::R), Admissible);
        assert!(classify_mu(&Partition::new(vec![7]), 6, 3, 2, Variant::S).is_err());
    }

    #[test]
    fn standard_examples() {
        assert!(!is_standard_monomial(&y("y{5}^3*y{2,5}^2*y{1,2,3,5}^2"), 5, 4, 2, Variant::S));
        assert_eq!(forbidden_pattern(&y("y{5}^3*y{2,5}^2*y{1,2,3,5}^2"), 5, 4, 2, Variant::S), Some(5));
        assert!(!is_standard_monomial(&y("y{1,2,3}^2"), 3, 2, 2, Variant::S));
    }

    #[test]
    fn basis_sizes() {
        for n in 1..=4 {
            for k in 0..=n {
                assert_eq!(enumerate_basis(n, k, 1, Variant::S).unwrap().len() as u128, count_osp(n, k, 1));
            }
        }
        let b = enumerate_basis(2, 1, 1, Variant::S).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].y, YMonomial::one());
    }

    #[test]
    fn tilde_b_prime_leading() {
        let g = w("2^0 1^0 3^0", 3, 1);
        let p = GdPair { word: g.clone(), d: vec![0, 1, 1] };
        let poly = tilde_b_prime(&p, 2).unwrap();
        let (lm, c) = poly.leading().unwrap();
        assert_eq!(lm, &tilde_b_gd(&g, &p.d).unwrap());
        assert_eq!(c, &crate::poly::int(1));
    }
}
