//! Symmetric functions for `r = 1`: compositions, Kostka numbers, ribbon
//! Schur functions, q-binomials, the multigraded Frobenius series and
//! decomposition of characters into irreducibles.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::combinatorics::factorial;
use crate::error::{Error, Result};
use crate::ideal::Variant;
use crate::oracle::{graded_character_route, Caps, CharacterRoute, GradedCharacter, YOracle};
use crate::partition::Partition;
use crate::poly::YPoly;

/// Largest `n` handled here.
pub const MAX_SYM_N: usize = 8;

fn check_bound(n: usize) -> Result<()> {
    if n > MAX_SYM_N {
        return Err(Error::ResourceLimit(format!("symmetric functions are limited to n ≤ {MAX_SYM_N}, got {n}")));
    }
    Ok(())
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::domain("composition parts must be positive"));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `D(α)`: the proper partial sums.
    pub fn descent_set(&self) -> Vec<usize> {
        let mut acc = 0;
        self.0[..self.0.len().saturating_sub(1)]
            .iter()
            .map(|p| {
                acc += p;
                acc
            })
            .collect()
    }

    pub fn from_descent_set(d: &[usize], n: usize) -> Result<Self> {
        let mut prev = 0;
        let mut parts = Vec::new();
        for &x in d.iter().chain(std::iter::once(&n)) {
            if x <= prev || x > n {
                return Err(Error::domain(format!("{d:?} is not a subset of [1, {n})")));
            }
            parts.push(x - prev);
            prev = x;
        }
        Ok(Composition(parts))
    }

    /// All `2^{n-1}` compositions of `n`, ordered by descending set.
    pub fn all_of(n: usize) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition(vec![])];
        }
        (0..n - 1)
            .map(|i| i + 1)
            .powerset()
            .map(|d| Composition::from_descent_set(&d, n).expect("valid descent set"))
            .collect()
    }

    /// Sorted parts.
    pub fn to_partition(&self) -> Partition {
        Partition::new(self.0.clone())
    }

    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        if t.trim().is_empty() {
            return Ok(Composition(vec![]));
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::parse(format!("bad composition `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// `β ⪯ α` when `D(β) ⊆ D(α)`.
pub fn refines(beta: &Composition, alpha: &Composition) -> Result<bool> {
    if beta.size() != alpha.size() {
        return Err(Error::domain(format!("{beta} and {alpha} have different sizes")));
    }
    let da = alpha.descent_set();
    Ok(beta.descent_set().iter().all(|x| da.contains(x)))
}

pub fn maj_comp(alpha: &Composition) -> usize {
    alpha.descent_set().iter().sum()
}

/// Polynomials in `q` as coefficient vectors, lowest degree first.
pub type QPoly = Vec<i64>;

fn qtrim(mut p: QPoly) -> QPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn qadd_into(acc: &mut QPoly, p: &[i64], shift: usize, scale: i64) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (i, c) in p.iter().enumerate() {
        acc[i + shift] += scale * c;
    }
}

pub fn qmul(a: &[i64], b: &[i64]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    qtrim(out)
}

/// Gaussian binomial `[a choose b]_q`; zero when `b > a`.
pub fn q_binomial(a: usize, b: usize) -> QPoly {
    if b > a {
        return vec![];
    }
    // row-by-row Pascal recurrence
    let mut row: Vec<QPoly> = vec![vec![1]];
    for m in 1..=a {
        let mut next = vec![vec![1]; m + 1];
        for j in 1..m {
            let mut p = row[j - 1].clone();
            qadd_into(&mut p, &row[j], j, 1);
            next[j] = qtrim(p);
        }
        row = next;
    }
    row[b].clone()
}

pub fn qpoly_string(p: &[i64]) -> String {
    let mut parts = Vec::new();
    for (i, &c) in p.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "q".to_string(),
            _ => format!("q^{i}"),
        };
        let s = match (c, i) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            (-1, _) => format!("-{mono}"),
            _ => format!("{c}*{mono}"),
        };
        parts.push(s);
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ").replace("+ -", "- ")
    }
}

/// Integer Schur expansion.
pub type SchurInt = BTreeMap<Partition, i64>;
/// Schur expansion with coefficients in `ℤ[q]`.
pub type SchurQ = BTreeMap<Partition, QPoly>;

/// All shapes obtained from `lambda` by adding a horizontal strip of size `a`.
fn add_horizontal_strip(lambda: &[usize], a: usize) -> Vec<Vec<usize>> {
    let len = lambda.len() + 1;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(i: usize, left: usize, lambda: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let len = lambda.len() + 1;
        if i == len {
            if left == 0 {
                let mut v = cur.clone();
                while v.last() == Some(&0) {
                    v.pop();
                }
                out.push(v);
            }
            return;
        }
        let base = lambda.get(i).copied().unwrap_or(0);
        let cap = if i == 0 { base + left } else { lambda[i - 1] };
        for v in base..=cap.min(base + left) {
            cur.push(v);
            rec(i + 1, left - (v - base), lambda, cur, out);
            cur.pop();
        }
    }
    rec(0, a, lambda, &mut cur, &mut out);
    out
}

/// `h_α` in the Schur basis by iterated Pieri rules; the coefficient of
/// `s_λ` is the Kostka number `K_{λ,α}`.
pub fn h_to_schur(alpha: &[usize]) -> Result<SchurInt> {
    check_bound(alpha.iter().sum())?;
    let mut shapes: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    shapes.insert(vec![], 1);
    for &a in alpha {
        let mut next: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
        for (sh, c) in &shapes {
            for nu in add_horizontal_strip(sh, a) {
                *next.entry(nu).or_insert(0) += c;
            }
        }
        shapes = next;
    }
    Ok(shapes.into_iter().map(|(sh, c)| (Partition::new(sh), c)).collect())
}

pub fn kostka(lambda: &Partition, mu: &[usize]) -> Result<i64> {
    if lambda.size() != mu.iter().sum::<usize>() {
        return Ok(0);
    }
    Ok(h_to_schur(mu)?.get(lambda).copied().unwrap_or(0))
}

/// Standard Young tableaux of shape `lambda`, each as the row index of
/// every entry `1..=n`.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Vec<usize>> {
    let shape = lambda.parts().to_vec();
    let n = lambda.size();
    let mut out = Vec::new();
    let mut fill = vec![0usize; shape.len()];
    let mut rows = Vec::with_capacity(n);
    fn rec(shape: &[usize], fill: &mut Vec<usize>, rows: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if rows.len() == n {
            out.push(rows.clone());
            return;
        }
        for i in 0..shape.len() {
            if fill[i] < shape[i] && (i == 0 || fill[i - 1] > fill[i]) {
                fill[i] += 1;
                rows.push(i);
                rec(shape, fill, rows, n, out);
                rows.pop();
                fill[i] -= 1;
            }
        }
    }
    rec(&shape, &mut fill, &mut rows, n, &mut out);
    out
}

/// `i` is a descent when `i + 1` sits in a strictly lower row.
fn tableau_descents(rows: &[usize]) -> Vec<usize> {
    (1..rows.len()).filter(|&i| rows[i] > rows[i - 1]).collect()
}

/// Ribbon Schur function by counting standard tableaux with descent set
/// `D(α)`.
pub fn ribbon_to_schur_by_tableaux(alpha: &Composition) -> Result<SchurInt> {
    let n = alpha.size();
    check_bound(n)?;
    let d = alpha.descent_set();
    let mut out = SchurInt::new();
    for lambda in Partition::all_of(n) {
        let c = standard_tableaux(&lambda).iter().filter(|t| tableau_descents(t) == d).count() as i64;
        if c != 0 {
            out.insert(lambda, c);
        }
    }
    Ok(out)
}

/// Ribbon Schur function by inclusion-exclusion over coarsenings:
/// `r_α = Σ_{β ⪯ α} (-1)^{ℓ(α)-ℓ(β)} h_β`.
pub fn ribbon_to_schur_by_inversion(alpha: &Composition) -> Result<SchurInt> {
    let n = alpha.size();
    check_bound(n)?;
    let mut out = SchurInt::new();
    let da = alpha.descent_set();
    for sub in da.iter().copied().powerset() {
        let beta = Composition::from_descent_set(&sub, n)?;
        let sign = if (alpha.len() - beta.len()).is_multiple_of(2) { 1 } else { -1 };
        for (lam, c) in h_to_schur(beta.parts())? {
            *out.entry(lam).or_insert(0) += sign * c;
        }
    }
    out.retain(|_, c| *c != 0);
    Ok(out)
}

/// Schur expansion of the ribbon indexed by `α`, computed both ways.
pub fn ribbon_to_schur(alpha: &Composition) -> Result<SchurInt> {
    let a = ribbon_to_schur_by_tableaux(alpha)?;
    let b = ribbon_to_schur_by_inversion(alpha)?;
    if a != b {
        return Err(Error::Certification(format!("ribbon {alpha}: tableaux and inversion disagree")));
    }
    Ok(a)
}

/// Ribbon-indexed expansion with coefficients in `ℤ[q]`, converted to Schur.
pub fn ribbon_q_to_schur(terms: &BTreeMap<Composition, QPoly>) -> Result<SchurQ> {
    let mut out = SchurQ::new();
    for (alpha, p) in terms {
        for (lam, c) in ribbon_to_schur(alpha)? {
            qadd_into(out.entry(lam).or_default(), p, 0, c);
        }
    }
    Ok(out.into_iter().map(|(l, p)| (l, qtrim(p))).filter(|(_, p)| !p.is_empty()).collect())
}

/// Polynomials in `t_1..t_n`: exponent vector to coefficient.
pub type TPoly = BTreeMap<Vec<u32>, i64>;

/// The multigraded Frobenius series of the Stanley-Reisner quotient for
/// variant S at `r = 1`, kept in the ribbon basis.
#[derive(Clone, Debug, PartialEq)]
pub struct MultigradedSeries {
    pub n: usize,
    pub terms: BTreeMap<Composition, TPoly>,
}

/// All vectors of `len` nonnegative integers with sum at most `budget`.
fn bounded_vectors(len: usize, budget: usize) -> Vec<Vec<u32>> {
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..=budget {
        for mut rest in bounded_vectors(len - 1, budget - first) {
            rest.insert(0, first as u32);
            out.push(rest);
        }
    }
    out
}

/// `Σ_{ℓ(α) ≤ k} (∏_{i ∈ D(α)} t_i) (Σ_{j_1+…+j_{n-k} ≤ k-ℓ(α)} ∏ t_i^{j_i}) r_α`.
pub fn multigraded_frobenius_s(n: usize, k: usize) -> Result<MultigradedSeries> {
    check_bound(n)?;
    if k > n {
        return Err(Error::domain(format!("k = {k} exceeds n = {n}")));
    }
    let comps: Vec<Composition> = Composition::all_of(n).into_iter().filter(|a| a.len() <= k && !a.is_empty()).collect();
    let terms: BTreeMap<Composition, TPoly> = comps
        .into_par_iter()
        .map(|alpha| {
            let mut base = vec![0u32; n];
            for i in alpha.descent_set() {
                base[i - 1] += 1;
            }
            let mut poly = TPoly::new();
            for j in bounded_vectors(n - k, k - alpha.len()) {
                let mut e = base.clone();
                for (i, ji) in j.iter().enumerate() {
                    e[i] += ji;
                }
                *poly.entry(e).or_insert(0) += 1;
            }
            (alpha, poly)
        })
        .collect();
    Ok(MultigradedSeries { n, terms })
}

impl MultigradedSeries {
    /// `t_i ↦ q^i`, still ribbon-indexed.
    pub fn specialize_ribbon(&self) -> BTreeMap<Composition, QPoly> {
        self.terms
            .iter()
            .map(|(a, p)| {
                let mut q = QPoly::new();
                for (e, c) in p {
                    let d: usize = e.iter().enumerate().map(|(i, &x)| (i + 1) * x as usize).sum();
                    qadd_into(&mut q, &[*c], d, 1);
                }
                (a.clone(), qtrim(q))
            })
            .collect()
    }

    /// Coefficient of one `t`-monomial, ribbon-indexed.
    pub fn coefficient(&self, exps: &[u32]) -> BTreeMap<Composition, i64> {
        self.terms
            .iter()
            .filter_map(|(a, p)| p.get(exps).map(|c| (a.clone(), *c)))
            .collect()
    }

    /// Schur coefficients as polynomials in `t`.
    pub fn to_schur(&self) -> Result<BTreeMap<Partition, TPoly>> {
        let mut out: BTreeMap<Partition, TPoly> = BTreeMap::new();
        for (alpha, p) in &self.terms {
            for (lam, c) in ribbon_to_schur(alpha)? {
                let slot = out.entry(lam).or_default();
                for (e, a) in p {
                    *slot.entry(e.clone()).or_insert(0) += c * a;
                }
            }
        }
        for p in out.values_mut() {
            p.retain(|_, c| *c != 0);
        }
        out.retain(|_, p| !p.is_empty());
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "basis": "ribbon",
            "terms": self.terms.iter().map(|(a, p)| json!({
                "composition": a.parts(),
                "poly": p.iter().map(|(e, c)| json!({"t": e, "coeff": c})).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// `t_i ↦ q^i` followed by conversion to Schur.
pub fn specialize(series: &MultigradedSeries) -> Result<SchurQ> {
    ribbon_q_to_schur(&series.specialize_ribbon())
}

/// `Σ_α q^{maj(α)} [n-ℓ(α) choose k-ℓ(α)]_q r_α` in Schur form.
pub fn graded_frobenius_formula(n: usize, k: usize) -> Result<SchurQ> {
    check_bound(n)?;
    let mut terms = BTreeMap::new();
    for alpha in Composition::all_of(n) {
        if alpha.is_empty() || alpha.len() > k {
            continue;
        }
        let mut p = vec![0i64; maj_comp(&alpha)];
        p.extend(q_binomial(n - alpha.len(), k - alpha.len()));
        terms.insert(alpha, qtrim(p));
    }
    ribbon_q_to_schur(&terms)
}

/// `χ^λ(ρ)` by the Murnaghan-Nakayama rule on beta-sets.
pub fn mn_character(lambda: &Partition, rho: &Partition) -> Result<i64> {
    if lambda.size() != rho.size() {
        return Err(Error::domain(format!("{lambda} and {rho} have different sizes")));
    }
    check_bound(lambda.size())?;
    let l = lambda.len();
    let beta: Vec<usize> = lambda.parts().iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect();
    Ok(mn_rec(beta, rho.parts()))
}

fn mn_rec(beta: Vec<usize>, rho: &[usize]) -> i64 {
    let Some((&t, rest)) = rho.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < t || beta.contains(&(b - t)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - t && x < b).count();
        let mut nb = beta.clone();
        nb[idx] = b - t;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(nb, rest);
    }
    total
}

/// `n! / z_ρ`.
pub fn class_size(rho: &Partition) -> u128 {
    let mut z: u128 = 1;
    for (part, group) in &rho.parts().iter().chunk_by(|&&p| p) {
        let m = group.count();
        z *= (part as u128).pow(m as u32) * factorial(m);
    }
    factorial(rho.size()) / z
}

/// `f^λ` by the hook length formula.
pub fn schur_dimension(lambda: &Partition) -> u128 {
    let conj = lambda.conjugate();
    let mut hooks: u128 = 1;
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            hooks *= (row - j + conj.parts()[j] - i - 1) as u128;
        }
    }
    factorial(lambda.size()) / hooks
}

/// Multiplicities `⟨χ_d, χ^λ⟩` per degree from one graded character per
/// class. Fails unless every multiplicity is a nonnegative integer.
pub fn frobenius_from_characters(chars: &[GradedCharacter], n: usize) -> Result<SchurQ> {
    check_bound(n)?;
    let classes = Partition::all_of(n);
    for c in &classes {
        if !chars.iter().any(|g| &g.class == c) {
            return Err(Error::Decomposition(format!("missing class {c}")));
        }
    }
    let top = chars.iter().map(|c| c.traces.len()).max().unwrap_or(0);
    let nfact = BigRational::from_integer(BigInt::from(factorial(n)));
    let mut out = SchurQ::new();
    for lambda in Partition::all_of(n) {
        let mut poly = vec![0i64; top];
        for (d, slot) in poly.iter_mut().enumerate() {
            let mut acc = BigRational::zero();
            for g in chars {
                let tr = g.traces.get(d).cloned().unwrap_or_else(BigRational::zero);
                let w = BigInt::from(class_size(&g.class)) * BigInt::from(mn_character(&lambda, &g.class)?);
                acc += tr * BigRational::from_integer(w);
            }
            let m = acc / &nfact;
            if !m.is_integer() || m.is_negative() {
                return Err(Error::Decomposition(format!("multiplicity {m} of s{lambda} in degree {d}")));
            }
            *slot = m.to_integer().to_i64().ok_or_else(|| Error::Decomposition("multiplicity overflow".into()))?;
        }
        let poly = qtrim(poly);
        if !poly.is_empty() {
            out.insert(lambda, poly);
        }
    }
    Ok(out)
}

/// Graded Frobenius image of the `r = 1` quotient from the graded
/// characters of one route.
pub fn graded_frobenius(n: usize, k: usize, variant: Variant, route: CharacterRoute, caps: Caps) -> Result<SchurQ> {
    check_bound(n)?;
    let chars = Partition::all_of(n)
        .par_iter()
        .map(|cl| graded_character_route(n, k, 1, variant, route, cl, caps))
        .collect::<Result<Vec<_>>>()?;
    frobenius_from_characters(&chars, n)
}

/// Multigraded Frobenius image of the `r = 1` Stanley-Reisner quotient,
/// read off the `μ`-slices of the y-oracle; `t_i` counts parts equal to `i`.
pub fn multigraded_frobenius_from_slices(
    n: usize,
    k: usize,
    variant: Variant,
    caps: Caps,
) -> Result<BTreeMap<Partition, TPoly>> {
    check_bound(n)?;
    let mut yo = YOracle::new(n, k, 1, variant, caps)?;
    let classes = Partition::all_of(n);
    let sigmas: Vec<Vec<usize>> = classes.iter().map(crate::oracle::class_representative).collect();
    let mut out: BTreeMap<Partition, TPoly> = BTreeMap::new();
    for mu in yo.all_mu()? {
        let std = yo.standard_monomials_mu(&mu)?;
        if std.is_empty() {
            continue;
        }
        let mut chars = Vec::new();
        for (cl, sigma) in classes.iter().zip(&sigmas) {
            let mut tr = BigRational::zero();
            for b in &std {
                tr += yo.normal_form(&YPoly::monomial(b.permute(sigma)))?.coeff(b);
            }
            chars.push(GradedCharacter { class: cl.clone(), traces: vec![tr] });
        }
        let exps: Vec<u32> = (1..=n).map(|i| mu.multiplicity(i) as u32).collect();
        for (lam, p) in frobenius_from_characters(&chars, n)? {
            if let Some(&c) = p.first() {
                *out.entry(lam).or_default().entry(exps.clone()).or_insert(0) += c;
            }
        }
    }
    Ok(out)
}

pub fn schur_q_to_json(s: &SchurQ) -> Value {
    json!({
        "basis": "schur",
        "terms": s.iter().map(|(l, p)| json!({
            "partition": l.parts(),
            "poly": qpoly_string(p),
            "coeffs": p,
        })).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn compositions() {
        assert!(refines(&c(&[2]), &c(&[1, 1])).unwrap());
        assert!(refines(&c(&[1, 2]), &c(&[1, 2])).unwrap());
        assert!(refines(&c(&[2]), &c(&[1, 2, 3])).is_err());
        let a = c(&[1, 2, 1, 1]);
        let count = Composition::all_of(5).iter().filter(|b| refines(b, &a).unwrap()).count();
        assert_eq!(count, 1 << (a.len() - 1));
        assert_eq!(maj_comp(&c(&[4])), 0);
        assert_eq!(maj_comp(&c(&[1, 1, 1, 1])), 6);
        assert_eq!(maj_comp(&c(&[2, 1, 3])), 5);
        assert_eq!(Composition::all_of(4).len(), 8);
    }

    #[test]
    fn q_binomials() {
        assert_eq!(q_binomial(2, 1), vec![1, 1]);
        assert_eq!(q_binomial(4, 2), vec![1, 1, 2, 1, 1]);
        assert_eq!(q_binomial(3, 0), vec![1]);
        assert!(q_binomial(1, 2).is_empty());
    }

    #[test]
    fn kostka_and_ribbons() {
        for n in 1..=5 {
            for lam in Partition::all_of(n) {
                assert_eq!(kostka(&lam, lam.parts()).unwrap(), 1);
                assert_eq!(kostka(&lam, &vec![1; n]).unwrap() as usize, standard_tableaux(&lam).len());
                assert_eq!(schur_dimension(&lam) as usize, standard_tableaux(&lam).len());
            }
            for mu in Partition::all_of(n) {
                assert_eq!(kostka(&p(&[n]), mu.parts()).unwrap(), 1);
            }
        }
        assert_eq!(ribbon_to_schur(&c(&[3])).unwrap(), [(p(&[3]), 1)].into_iter().collect());
        assert_eq!(ribbon_to_schur(&c(&[1, 1])).unwrap(), [(p(&[1, 1]), 1)].into_iter().collect());
        let mut sum = SchurInt::new();
        for a in [c(&[2]), c(&[1, 1])] {
            for (l, v) in ribbon_to_schur(&a).unwrap() {
                *sum.entry(l).or_insert(0) += v;
            }
        }
        assert_eq!(sum, h_to_schur(&[1, 1]).unwrap());
        assert!(ribbon_to_schur(&c(&[9])).is_err());
    }

    #[test]
    fn characters_of_s3() {
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert_eq!(mn_character(&p(&[1, 1, 1]), &p(&[2, 1])).unwrap(), -1);
        assert_eq!(class_size(&p(&[2, 1])), 3);
        // regular representation
        let chars: Vec<GradedCharacter> = Partition::all_of(3)
            .into_iter()
            .map(|cl| {
                let t = if cl.parts() == [1, 1, 1] { 6 } else { 0 };
                GradedCharacter { class: cl, traces: vec![BigRational::from_integer(BigInt::from(t))] }
            })
            .collect();
        let f = frobenius_from_characters(&chars, 3).unwrap();
        assert_eq!(f[&p(&[2, 1])], vec![2]);
        assert_eq!(f[&p(&[3])], vec![1]);
        assert_eq!(f[&p(&[1, 1, 1])], vec![1]);
        let bad = vec![GradedCharacter { class: p(&[1]), traces: vec![BigRational::new(1.into(), 2.into())] }];
        assert!(matches!(frobenius_from_characters(&bad, 1), Err(Error::Decomposition(_))));
    }

    #[test]
    fn multigraded_specializes() {
        for n in 1..=5 {
            for k in 0..=n {
                let s = multigraded_frobenius_s(n, k).unwrap();
                assert_eq!(specialize(&s).unwrap(), graded_frobenius_formula(n, k).unwrap());
            }
        }
        // t = 0 keeps only α = (n)
        let s = multigraded_frobenius_s(3, 2).unwrap();
        assert_eq!(s.coefficient(&[0, 0, 0]), [(c(&[3]), 1)].into_iter().collect());
    }
}
