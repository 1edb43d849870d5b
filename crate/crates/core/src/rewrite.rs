//! Straightening by moves: expansion of multichain monomials in the
//! standard basis of the Stanley-Reisner quotient, and the stratified
//! x-side analogue.

use std::fmt;

use num_traits::{One, Zero};
use num_rational::BigRational;

use crate::basis::{classify_mu, is_standard_monomial, Admissibility};
use crate::error::{Error, Result};
use crate::ideal::Variant;
use crate::monomial::{XMonomial, YMonomial};
use crate::partition::Partition;
use crate::poly::{XPoly, YPoly};
use crate::subset::Subset;

/// Safety net on the number of moves in one reduction.
pub const MAX_MOVES: usize = 1_000_000;

/// `−Σ_{T ≠ S, |T| = |S|} (y / y_S^r) y_T^r`, keeping multichain terms.
pub fn y_move(y: &YMonomial, s: Subset, n: usize, r: usize) -> Result<YPoly> {
    let rest = y
        .div(&YMonomial::power(s, r as u32))
        .ok_or_else(|| Error::NotApplicable(format!("{} does not divide {y}", YMonomial::power(s, r as u32))))?;
    let mut out = YPoly::zero();
    for t in Subset::all_of_size(n, s.len()) {
        if t == s {
            continue;
        }
        let cand = rest.mul(&YMonomial::power(t, r as u32));
        if cand.is_multichain() {
            out.add_term(cand, -BigRational::one());
        }
    }
    Ok(out)
}

/// `m − (m / x_S^r) e_{|S|}(x^r)`.
pub fn x_move(m: &XMonomial, s: Subset, n: usize, r: usize) -> Result<XPoly> {
    let xs = XMonomial::subset_power(n, s, r as u32);
    let rest = m.div(&xs).ok_or_else(|| Error::NotApplicable(format!("{xs} does not divide {m}")))?;
    let mut out = XPoly::zero();
    for t in Subset::all_of_size(n, s.len()) {
        if t != s {
            out.add_term(rest.mul(&XMonomial::subset_power(n, t, r as u32)), -BigRational::one());
        }
    }
    Ok(out)
}

/// How to pick among several applicable moves. All choices only use the
/// designated variables, so each move lowers the target.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Strategy {
    #[default]
    LargestVariable,
    SmallestVariable,
    LowestCase,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [Strategy::LargestVariable, Strategy::SmallestVariable, Strategy::LowestCase];
}

/// Variables designated for a move by the four offending patterns of an
/// admissible multichain monomial, tagged with the case number.
pub fn designated_variables(y: &YMonomial, n: usize, k: usize, r: usize) -> Vec<(u8, Subset)> {
    let r32 = r as u32;
    let thr = n + 1 - k;
    let chain: Vec<(Subset, u32)> = y.terms().iter().rev().copied().collect();
    let u = chain.len();
    let mut out = Vec::new();
    for &(s, t) in &chain {
        if t >= r32 && s.len() >= thr && s.len() < n && s == Subset::prefix(s.len()) {
            out.push((1, s));
        }
    }
    for a in 0..u {
        for b in a + 1..u {
            let (s, ts) = chain[a];
            let (t, tt) = chain[b];
            let diff = t.difference(s);
            if ts >= r32 && s.len() >= thr && diff.min() > s.max() {
                out.push((2, s));
            }
            if tt >= r32 && t.len() >= thr && Subset::prefix(diff.max().unwrap_or(0)).is_subset_of(t) {
                out.push((3, t));
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
                    out.push((4, s2));
                }
            }
        }
    }
    out
}

fn choose(cands: &[(u8, Subset)], strategy: Strategy) -> Option<Subset> {
    match strategy {
        Strategy::LargestVariable => cands.iter().map(|c| c.1).max(),
        Strategy::SmallestVariable => cands.iter().map(|c| c.1).min(),
        Strategy::LowestCase => cands.iter().min_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1))).map(|c| c.1),
    }
}

#[derive(Clone, Debug)]
pub struct RewriteStep {
    pub target: YMonomial,
    pub moved: Subset,
    /// What the target was replaced with.
    pub replacement: YPoly,
    /// The whole expression after the move.
    pub after: YPoly,
}

#[derive(Clone, Debug)]
pub struct RewriteTrace {
    pub input: YMonomial,
    pub admissibility: Admissibility,
    pub steps: Vec<RewriteStep>,
    pub result: YPoly,
}

impl fmt::Display for RewriteTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "y = {}", self.input)?;
        match self.admissibility {
            Admissibility::Admissible => {}
            Admissibility::SemiAdmissible => writeln!(f, "mu({}) is semi-admissible", self.input.mu())?,
            Admissibility::NonAdmissible => writeln!(f, "mu({}) is non-admissible", self.input.mu())?,
        }
        for (i, s) in self.steps.iter().enumerate() {
            writeln!(f, "({}) move on y{}^r in {}", i + 1, s.moved, s.target)?;
            writeln!(f, "    y ≡ {}", s.after)?;
        }
        write!(f, "result: {}", self.result)
    }
}

fn check_mu(y: &YMonomial, n: usize, k: usize, r: usize, variant: Variant) -> Result<Admissibility> {
    if k > n || n == 0 {
        return Err(Error::domain(format!("need 0 ≤ k ≤ n, got n={n}, k={k}")));
    }
    if y.max_letter() > n {
        return Err(Error::domain(format!("{y} is not a monomial over [{n}]")));
    }
    classify_mu(&y.mu(), n, k, r, variant)
}

/// Expansion of a multichain monomial in the standard monomials.
pub fn reduce_y(y: &YMonomial, n: usize, k: usize, r: usize, variant: Variant) -> Result<YPoly> {
    Ok(reduce_y_traced(y, n, k, r, variant, Strategy::default())?.result)
}

pub fn reduce_y_traced(
    y: &YMonomial,
    n: usize,
    k: usize,
    r: usize,
    variant: Variant,
    strategy: Strategy,
) -> Result<RewriteTrace> {
    if !y.is_multichain() {
        return Err(Error::NotAMultichain(y.to_string()));
    }
    let adm = check_mu(y, n, k, r, variant)?;
    let mut trace = RewriteTrace { input: y.clone(), admissibility: adm, steps: vec![], result: YPoly::zero() };
    if adm != Admissibility::Admissible {
        return Ok(trace);
    }
    let mu = y.mu();
    let mut poly = YPoly::monomial(y.clone());
    loop {
        let target = poly
            .terms_desc()
            .map(|(m, _)| m)
            .find(|m| !is_standard_monomial(m, n, k, r, variant))
            .cloned();
        let Some(target) = target else { break };
        if trace.steps.len() >= MAX_MOVES {
            return Err(Error::ResourceLimit(format!("more than {MAX_MOVES} moves reducing {y}")));
        }
        let cands = designated_variables(&target, n, k, r);
        let s = choose(&cands, strategy)
            .ok_or_else(|| Error::Certification(format!("no designated move for non-standard {target}")))?;
        let repl = y_move(&target, s, n, r)?;
        for (m, _) in repl.terms_desc() {
            if m >= &target {
                return Err(Error::Certification(format!("move on {s} in {target} produced larger {m}")));
            }
            if m.mu() != mu {
                return Err(Error::Certification(format!("move on {s} in {target} changed mu at {m}")));
            }
        }
        let c = poly.remove(&target).unwrap_or_else(BigRational::zero);
        poly.add_assign_scaled(&repl, &c);
        trace.steps.push(RewriteStep { target, moved: s, replacement: repl, after: poly.clone() });
    }
    trace.result = poly;
    Ok(trace)
}

/// Result of one stratum of the x-side reduction.
#[derive(Clone, Debug, PartialEq)]
pub struct StratumReduction {
    pub same_mu: XPoly,
    pub higher_mu: XPoly,
}

fn is_x_standard(m: &XMonomial, n: usize, k: usize, r: usize, variant: Variant) -> bool {
    is_standard_monomial(&m.multichain_preimage(), n, k, r, variant)
}

/// Rewrites `m` as Garsia-Stanton monomials with the same μ plus
/// monomials of strictly larger μ.
pub fn reduce_x_stratum(m: &XMonomial, n: usize, k: usize, r: usize, variant: Variant) -> Result<StratumReduction> {
    if m.n() != n || k > n {
        return Err(Error::domain(format!("monomial {m} is not over {n} variables or k > n")));
    }
    let mu = m.mu();
    let push_higher = |higher: &mut XPoly, t: &XMonomial, c: &BigRational| -> Result<()> {
        if !t.mu().strictly_dominates(&mu)? {
            return Err(Error::Certification(format!("{t} is neither in the stratum of {mu} nor above it")));
        }
        higher.add_term(t.clone(), c.clone());
        Ok(())
    };
    match classify_mu(&mu, n, k, r, variant)? {
        Admissibility::NonAdmissible => Ok(StratumReduction { same_mu: XPoly::zero(), higher_mu: XPoly::zero() }),
        Admissibility::SemiAdmissible => {
            // some y_S^{r+1} with |S| ≥ n-k+1 in the preimage; its move has no
            // same-μ terms
            let y = m.multichain_preimage();
            let thr = n + 1 - k;
            let (s, _) = y
                .terms()
                .iter()
                .find(|&&(s, e)| s.len() >= thr && s.len() < n && e > r as u32)
                .ok_or_else(|| Error::Certification(format!("semi-admissible {m} without y_S^(r+1)")))?;
            let moved = x_move(m, *s, n, r)?;
            let mut higher = XPoly::zero();
            for (t, c) in moved.terms_desc() {
                push_higher(&mut higher, t, c)?;
            }
            Ok(StratumReduction { same_mu: XPoly::zero(), higher_mu: higher })
        }
        Admissibility::Admissible => {
            let mut same = XPoly::monomial(m.clone());
            let mut higher = XPoly::zero();
            let mut moves = 0usize;
            loop {
                let target =
                    same.terms_desc().map(|(t, _)| t).find(|t| !is_x_standard(t, n, k, r, variant)).cloned();
                let Some(target) = target else { break };
                moves += 1;
                if moves > MAX_MOVES {
                    return Err(Error::ResourceLimit(format!("more than {MAX_MOVES} moves reducing {m}")));
                }
                let pre = target.multichain_preimage();
                let s = choose(&designated_variables(&pre, n, k, r), Strategy::LargestVariable)
                    .ok_or_else(|| Error::Certification(format!("no designated move for {target}")))?;
                let moved = x_move(&target, s, n, r)?;
                let c = same.remove(&target).unwrap_or_else(BigRational::zero);
                for (t, v) in moved.terms_desc() {
                    let cv = v * &c;
                    if t.mu() == mu {
                        same.add_term(t.clone(), cv);
                    } else {
                        push_higher(&mut higher, t, &cv)?;
                    }
                }
            }
            Ok(StratumReduction { same_mu: same, higher_mu: higher })
        }
    }
}

/// Full expansion of `m` in the x-side Garsia-Stanton basis, processing
/// μ-strata from the lexicographically smallest upward.
pub fn normal_form_x(m: &XMonomial, n: usize, k: usize, r: usize, variant: Variant) -> Result<XPoly> {
    normal_form_x_poly(&XPoly::monomial(m.clone()), n, k, r, variant)
}

pub fn normal_form_x_poly(p: &XPoly, n: usize, k: usize, r: usize, variant: Variant) -> Result<XPoly> {
    let mut pool = p.clone();
    let mut out = XPoly::zero();
    let bound = pool.monomials().map(|m| Partition::all_of(m.degree()).len()).max().unwrap_or(0) + 1;
    let mut rounds = 0usize;
    let mut last: Option<Partition> = None;
    while !pool.is_zero() {
        rounds += 1;
        let mu = pool.monomials().map(|m| m.mu()).min().expect("nonempty pool");
        if rounds > bound || last.as_ref().is_some_and(|l| &mu <= l) {
            return Err(Error::Certification(format!("stratum recursion did not progress at {mu}")));
        }
        let group: Vec<(XMonomial, BigRational)> =
            pool.terms_desc().filter(|(t, _)| t.mu() == mu).map(|(t, c)| (t.clone(), c.clone())).collect();
        for (t, c) in group {
            pool.remove(&t);
            let red = reduce_x_stratum(&t, n, k, r, variant)?;
            out.add_assign_scaled(&red.same_mu, &c);
            pool.add_assign_scaled(&red.higher_mu, &c);
        }
        last = Some(mu);
    }
    Ok(out)
}

/// Same-μ coefficients of the x reduction against `φ` of the y reduction.
pub fn stratum_mirrors(m: &XMonomial, n: usize, k: usize, r: usize, variant: Variant) -> Result<bool> {
    let x = reduce_x_stratum(m, n, k, r, variant)?.same_mu;
    let y = reduce_y(&m.multichain_preimage(), n, k, r, variant)?.phi(n);
    Ok(x == y)
}

/// Applies [`reduce_y`] termwise.
pub fn reduce_y_poly(p: &YPoly, n: usize, k: usize, r: usize, variant: Variant) -> Result<YPoly> {
    let mut out = YPoly::zero();
    for (m, c) in p.terms_desc() {
        if !m.is_multichain() {
            continue;
        }
        out.add_assign_scaled(&reduce_y(m, n, k, r, variant)?, c);
    }
    Ok(out)
}

/// True when `p` is a combination of standard monomials only.
pub fn is_standard_poly(p: &YPoly, n: usize, k: usize, r: usize, variant: Variant) -> bool {
    p.monomials().all(|m| is_standard_monomial(m, n, k, r, variant))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    fn unit() -> BigRational {
        int(1)
    }

    fn y(s: &str) -> YMonomial {
        YMonomial::parse(s).unwrap()
    }

    fn x(s: &str) -> XMonomial {
        XMonomial::parse(s, 5).unwrap()
    }

    #[test]
    fn worked_y_reduction() {
        let start = y("y{5}^3*y{2,5}^2*y{1,2,3,5}^2");
        let t = reduce_y_traced(&start, 5, 4, 2, Variant::S, Strategy::default()).unwrap();
        assert_eq!(t.steps.len(), 2);
        assert_eq!(t.steps[0].moved, Subset::from_elems([1, 2, 3, 5]).unwrap());
        assert_eq!(t.steps[0].after.to_string(), "-y{1,2,4,5}^2*y{2,5}^2*y{5}^3 - y{2,3,4,5}^2*y{2,5}^2*y{5}^3");
        assert_eq!(
            t.result.to_string(),
            "-y{1,2,4,5}^2*y{2,5}^2*y{5}^3 + y{2,3,4,5}^2*y{3,5}^2*y{5}^3 + y{2,3,4,5}^2*y{4,5}^2*y{5}^3"
        );
        for s in Strategy::ALL {
            assert_eq!(reduce_y_traced(&start, 5, 4, 2, Variant::S, s).unwrap().result, t.result);
        }
    }

    #[test]
    fn worked_x_reduction() {
        let m = x("x5^7*x2^4*x1^2*x3^2");
        let first = x_move(&m, Subset::from_elems([1, 2, 3, 5]).unwrap(), 5, 2).unwrap();
        assert_eq!(first.len(), 4);
        let red = reduce_x_stratum(&m, 5, 4, 2, Variant::S).unwrap();
        let mut expect = XPoly::zero();
        expect.add_term(x("x5^7*x2^4*x1^2*x4^2"), -unit());
        expect.add_term(x("x5^7*x3^4*x2^2*x4^2"), unit());
        expect.add_term(x("x5^7*x4^4*x2^2*x3^2"), unit());
        assert_eq!(red.same_mu, expect);
        assert!(stratum_mirrors(&m, 5, 4, 2, Variant::S).unwrap());
    }

    #[test]
    fn trivial_cases() {
        let std = y("y{1,3}");
        assert_eq!(reduce_y(&std, 3, 2, 1, Variant::S).unwrap(), YPoly::monomial(std.clone()));
        // μ with r parts equal to n
        assert!(reduce_y(&y("y{1,2,3}^2"), 3, 2, 2, Variant::R).unwrap().is_zero());
        assert!(y_move(&y("y{1,2,3}"), Subset::prefix(3), 3, 1).unwrap().is_zero());
        assert!(matches!(y_move(&y("y{1}"), Subset::prefix(2), 3, 1), Err(Error::NotApplicable(_))));
        assert!(matches!(reduce_y(&y("y{1}*y{2}"), 3, 1, 1, Variant::S), Err(Error::NotAMultichain(_))));
    }
}
