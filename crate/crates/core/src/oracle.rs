//! Linear-algebra ground truth for both quotients: graded dimensions,
//! normal forms, standard-basis certification and characters.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::basis::{enumerate_basis, is_standard_monomial};
use crate::combinatorics::{enumerate_faces, enumerate_osp};
use crate::error::{Error, Result};
use crate::ideal::{theta, Setting, Variant};
use crate::linalg::{Echelon, RatVec, Rref, SparseVec};
use crate::monomial::{multichains_of_degree, multichains_with_mu, x_monomials_in_box, XMonomial, YMonomial};
use crate::partition::Partition;
use crate::poly::{XPoly, YPoly};
use crate::rewrite::{normal_form_x, reduce_x_stratum, reduce_y};
use crate::subset::{Subset, MAX_N};

/// Resource guardrails.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Caps {
    pub max_degree: usize,
    pub max_slice: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_degree: 40, max_slice: 200_000 }
    }
}

fn check_params(n: usize, k: usize, r: usize) -> Result<()> {
    if n == 0 || n > MAX_N || k > n || r == 0 {
        return Err(Error::domain(format!("invalid parameters n={n}, k={k}, r={r}")));
    }
    Ok(())
}

fn residue(m: &XMonomial, r: usize) -> Vec<u32> {
    m.exps().iter().map(|&e| e % r as u32).collect()
}

struct XSlice {
    monos: Vec<XMonomial>,
    index: HashMap<XMonomial, usize>,
    ech: Echelon,
}

impl XSlice {
    fn standard(&self) -> impl Iterator<Item = &XMonomial> {
        self.monos.iter().enumerate().filter(|(i, _)| !self.ech.is_pivot(*i)).map(|(_, m)| m)
    }
}

/// Quotient of `ℂ[x_1..x_n]` by `⟨x_i^P, e_{n-k+1}(x^r), ..., e_n(x^r)⟩`,
/// sliced by degree and exponent residues mod `r`. Monomials outside the box
/// `exponents < P` lie in the ideal; the rows of a slice are the box parts of
/// `e_j(x^r) · m`.
pub struct XOracle {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub variant: Variant,
    pub caps: Caps,
    p: usize,
    slices: HashMap<(usize, Vec<u32>), XSlice>,
    boxes: HashMap<usize, Vec<XMonomial>>,
    prepared: HashSet<usize>,
}

impl XOracle {
    pub fn new(n: usize, k: usize, r: usize, variant: Variant, caps: Caps) -> Result<Self> {
        check_params(n, k, r)?;
        Ok(XOracle { n, k, r, variant, caps, p: variant.power(k, r), slices: HashMap::new(), boxes: HashMap::new(), prepared: HashSet::new() })
    }

    fn box_monomials(&mut self, d: usize) -> Result<&Vec<XMonomial>> {
        if !self.boxes.contains_key(&d) {
            let b = if self.p == 0 { vec![] } else { x_monomials_in_box(self.n, d, self.p as u32) };
            self.boxes.insert(d, b);
        }
        Ok(&self.boxes[&d])
    }

    /// Builds every residue slice of degree `d`.
    fn prepare(&mut self, d: usize) -> Result<()> {
        if d > self.caps.max_degree {
            return Err(Error::ResourceLimit(format!("degree {d} exceeds the cap {}", self.caps.max_degree)));
        }
        if !self.prepared.insert(d) {
            return Ok(());
        }
        let (n, r) = (self.n, self.r);
        let top = self.box_monomials(d)?.clone();
        let mut groups: BTreeMap<Vec<u32>, Vec<XMonomial>> = BTreeMap::new();
        for m in top {
            groups.entry(residue(&m, r)).or_default().push(m);
        }
        let mut lower: Vec<(usize, Vec<XMonomial>)> = Vec::new();
        for j in n + 1 - self.k..=n {
            if j * r <= d && self.k > 0 {
                lower.push((j, self.box_monomials(d - j * r)?.clone()));
            }
        }
        let caps = self.caps;
        let p = self.p as u32;
        let built: Vec<Result<(Vec<u32>, XSlice)>> = groups
            .into_par_iter()
            .map(|(res, monos)| {
                if monos.len() > caps.max_slice {
                    return Err(Error::ResourceLimit(format!("slice of {} monomials in degree {d}", monos.len())));
                }
                let index: HashMap<XMonomial, usize> = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
                let mut ech = Echelon::new();
                'rows: for (j, low) in &lower {
                    for m in low.iter().filter(|m| residue(m, r) == res) {
                        let mut row: SparseVec = Subset::all_of_size(n, *j)
                            .into_iter()
                            .map(|t| m.mul(&XMonomial::subset_power(n, t, r as u32)))
                            .filter(|t| t.exps().iter().all(|&e| e < p))
                            .map(|t| (index[&t], BigInt::one()))
                            .collect();
                        row.sort_by_key(|e| e.0);
                        ech.insert(row);
                        if ech.rank() == monos.len() {
                            break 'rows;
                        }
                    }
                }
                Ok((res, XSlice { monos, index, ech }))
            })
            .collect();
        for b in built {
            let (res, s) = b?;
            self.slices.insert((d, res), s);
        }
        Ok(())
    }

    pub fn quotient_dim(&mut self, d: usize) -> Result<usize> {
        self.prepare(d)?;
        Ok(self.slices.iter().filter(|((dd, _), _)| *dd == d).map(|(_, s)| s.monos.len() - s.ech.rank()).sum())
    }

    /// Standard monomials of degree `d` (non-leading monomials), descending.
    pub fn standard_monomials(&mut self, d: usize) -> Result<Vec<XMonomial>> {
        self.prepare(d)?;
        let mut out: Vec<XMonomial> = self
            .slices
            .iter()
            .filter(|((dd, _), _)| *dd == d)
            .flat_map(|(_, s)| s.standard().cloned())
            .collect();
        out.sort_by(|a, b| b.cmp(a));
        Ok(out)
    }

    /// Quotient dimensions from degree 0 up to the last nonzero degree.
    pub fn hilbert(&mut self) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for d in 0.. {
            let q = self.quotient_dim(d)?;
            if q == 0 {
                break;
            }
            out.push(q);
        }
        Ok(out)
    }

    /// Normal form in the oracle's standard monomials.
    pub fn normal_form(&mut self, f: &XPoly) -> Result<XPoly> {
        let p = self.p as u32;
        let mut groups: BTreeMap<(usize, Vec<u32>), Vec<(XMonomial, BigRational)>> = BTreeMap::new();
        for (m, c) in f.terms_desc() {
            if m.n() != self.n {
                return Err(Error::domain(format!("{m} is not over {} variables", self.n)));
            }
            if m.exps().iter().all(|&e| e < p) {
                groups.entry((m.degree(), residue(m, self.r))).or_default().push((m.clone(), c.clone()));
            }
        }
        let mut out = XPoly::zero();
        for ((d, res), terms) in groups {
            self.prepare(d)?;
            let s = &self.slices[&(d, res)];
            let v: RatVec = terms.into_iter().map(|(m, c)| (s.index[&m], c)).collect();
            for (i, c) in s.ech.normal_form(&v) {
                out.add_term(s.monos[i].clone(), c);
            }
        }
        Ok(out)
    }

    pub fn in_ideal(&mut self, f: &XPoly) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

struct YSlice {
    monos: Vec<YMonomial>,
    index: HashMap<YMonomial, usize>,
    ech: Echelon,
}

/// Stanley-Reisner quotient by `θ_{n-k+1}, ..., θ_n` and multichains of
/// length `P`, sliced by `μ`. Every multichain term of `θ_j · Y` has
/// `μ(Y) ∪ (j^r)`, so each slice is spanned by such products.
pub struct YOracle {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub variant: Variant,
    pub caps: Caps,
    p: usize,
    slices: HashMap<Partition, YSlice>,
    thetas: Vec<YPoly>,
}

impl YOracle {
    pub fn new(n: usize, k: usize, r: usize, variant: Variant, caps: Caps) -> Result<Self> {
        check_params(n, k, r)?;
        let thetas = (1..=n).map(|i| theta(i, n, r)).collect::<Result<_>>()?;
        Ok(YOracle { n, k, r, variant, caps, p: variant.power(k, r), slices: HashMap::new(), thetas })
    }

    /// Every `μ` with fewer than `P` parts, each at most `n`.
    pub fn all_mu(&self) -> Result<Vec<Partition>> {
        if self.p == 0 {
            return Ok(vec![]);
        }
        let count = crate::combinatorics::binomial(self.n + self.p - 1, self.n);
        if count > 50 * self.caps.max_slice as u128 {
            return Err(Error::ResourceLimit(format!("{count} multidegrees")));
        }
        Ok(Partition::in_box(self.p - 1, self.n))
    }

    fn prepare(&mut self, mu: &Partition) -> Result<()> {
        if self.slices.contains_key(mu) {
            return Ok(());
        }
        let monos = multichains_with_mu(self.n, mu);
        if monos.len() > self.caps.max_slice {
            return Err(Error::ResourceLimit(format!("slice of {} monomials at {mu}", monos.len())));
        }
        let index: HashMap<YMonomial, usize> = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut ech = Echelon::new();
        let r = self.r;
        for j in self.n + 1 - self.k..=self.n {
            if self.k == 0 || mu.multiplicity(j) < r {
                continue;
            }
            let mut parts = mu.parts().to_vec();
            for _ in 0..r {
                let pos = parts.iter().position(|&p| p == j).expect("multiplicity checked");
                parts.remove(pos);
            }
            let lower = Partition::new(parts);
            for m in multichains_with_mu(self.n, &lower) {
                let prod = YPoly::monomial(m).mul_sr(&self.thetas[j - 1]);
                let row: SparseVec = prod
                    .terms_desc()
                    .map(|(t, c)| (index[t], c.to_integer()))
                    .collect();
                ech.insert(row);
                if ech.rank() == monos.len() {
                    break;
                }
            }
        }
        self.slices.insert(mu.clone(), YSlice { monos, index, ech });
        Ok(())
    }

    pub fn quotient_dim_mu(&mut self, mu: &Partition) -> Result<usize> {
        if mu.len() >= self.p {
            return Ok(0);
        }
        self.prepare(mu)?;
        let s = &self.slices[mu];
        Ok(s.monos.len() - s.ech.rank())
    }

    /// Non-leading multichains in the slice, descending.
    pub fn standard_monomials_mu(&mut self, mu: &Partition) -> Result<Vec<YMonomial>> {
        if mu.len() >= self.p {
            return Ok(vec![]);
        }
        self.prepare(mu)?;
        let s = &self.slices[mu];
        Ok(s.monos.iter().enumerate().filter(|(i, _)| !s.ech.is_pivot(*i)).map(|(_, m)| m.clone()).collect())
    }

    /// Quotient dimensions indexed by `deg_tilde` (when `tilde`) or by the
    /// number of variables.
    pub fn hilbert(&mut self, tilde: bool) -> Result<Vec<usize>> {
        let mut out: Vec<usize> = Vec::new();
        for mu in self.all_mu()? {
            let q = self.quotient_dim_mu(&mu)?;
            let d = if tilde { mu.size() } else { mu.len() };
            if q > 0 {
                if out.len() <= d {
                    out.resize(d + 1, 0);
                }
                out[d] += q;
            }
        }
        Ok(out)
    }

    pub fn normal_form(&mut self, f: &YPoly) -> Result<YPoly> {
        let mut groups: BTreeMap<Partition, Vec<(YMonomial, BigRational)>> = BTreeMap::new();
        for (m, c) in f.terms_desc() {
            if m.max_letter() > self.n {
                return Err(Error::domain(format!("{m} is not over [{}]", self.n)));
            }
            if m.is_multichain() && m.degree() < self.p {
                groups.entry(m.mu()).or_default().push((m.clone(), c.clone()));
            }
        }
        let mut out = YPoly::zero();
        for (mu, terms) in groups {
            self.prepare(&mu)?;
            let s = &self.slices[&mu];
            let v: RatVec = terms.into_iter().map(|(m, c)| (s.index[&m], c)).collect();
            for (i, c) in s.ech.normal_form(&v) {
                out.add_term(s.monos[i].clone(), c);
            }
        }
        Ok(out)
    }

    pub fn in_ideal(&mut self, f: &YPoly) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeRow {
    pub degree: usize,
    pub monomials: BigUint,
    pub ideal_dim: BigUint,
    pub quotient_dim: usize,
}

#[derive(Clone, Debug)]
pub struct GradedDimensionReport {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub variant: Variant,
    pub setting: Setting,
    pub rows: Vec<DegreeRow>,
}

impl GradedDimensionReport {
    pub fn total(&self) -> usize {
        self.rows.iter().map(|r| r.quotient_dim).sum()
    }

    pub fn coefficients(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.rows.iter().map(|r| r.quotient_dim).collect();
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n, "k": self.k, "r": self.r,
            "variant": self.variant.to_string(), "setting": self.setting.to_string(),
            "degrees": self.rows.iter().map(|r| json!({
                "degree": r.degree,
                "monomials": r.monomials.to_string(),
                "ideal_dim": r.ideal_dim.to_string(),
                "quotient_dim": r.quotient_dim,
            })).collect::<Vec<_>>(),
            "hilbert": self.coefficients(),
            "total": self.total(),
        })
    }
}

/// Number of monomials in `n` variables of degree `d`.
fn x_monomial_count(n: usize, d: usize) -> BigUint {
    binomial_big(d + n - 1, n - 1)
}

fn binomial_big(a: usize, b: usize) -> BigUint {
    if b > a {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..b {
        acc = acc * BigUint::from(a - i) / BigUint::from(i + 1);
    }
    acc
}

/// Monomials in the `2^n - 1` y-variables, counted by `deg_tilde` up to `top`:
/// coefficients of `∏_j (1 - q^j)^{-C(n,j)}`.
fn y_monomial_counts_tilde(n: usize, top: usize) -> Vec<BigUint> {
    let mut c = vec![BigUint::zero(); top + 1];
    c[0] = BigUint::one();
    for j in 1..=n {
        for _ in 0..crate::combinatorics::binomial(n, j) {
            for d in j..=top {
                let add = c[d - j].clone();
                c[d] += add;
            }
        }
    }
    c
}

/// Rank of the degree-`d` part of the ideal. In the y-setting the degree is
/// the number of variables.
pub fn ideal_slice_dimension(
    n: usize,
    k: usize,
    r: usize,
    variant: Variant,
    setting: Setting,
    d: usize,
    caps: Caps,
) -> Result<BigUint> {
    match setting {
        Setting::X => {
            let q = XOracle::new(n, k, r, variant, caps)?.quotient_dim(d)?;
            Ok(x_monomial_count(n, d) - BigUint::from(q))
        }
        Setting::Y => {
            let mut o = YOracle::new(n, k, r, variant, caps)?;
            let mut q = 0usize;
            if d < o.p {
                for mu in Partition::in_box(d, n).into_iter().filter(|m| m.len() == d) {
                    q += o.quotient_dim_mu(&mu)?;
                }
            }
            let vars = (1usize << n) - 1;
            Ok(binomial_big(d + vars - 1, d) - BigUint::from(q))
        }
    }
}

/// Graded dimensions from linear algebra. The y-setting is graded by
/// `deg_tilde` so that it is comparable with the x-setting.
pub fn hilbert_oracle(
    n: usize,
    k: usize,
    r: usize,
    variant: Variant,
    setting: Setting,
    caps: Caps,
) -> Result<GradedDimensionReport> {
    let rows = match setting {
        Setting::X => {
            let h = XOracle::new(n, k, r, variant, caps)?.hilbert()?;
            let top = h.len();
            (0..=top)
                .map(|d| {
                    let q = h.get(d).copied().unwrap_or(0);
                    let total = x_monomial_count(n, d);
                    DegreeRow { degree: d, ideal_dim: &total - BigUint::from(q), monomials: total, quotient_dim: q }
                })
                .collect()
        }
        Setting::Y => {
            let h = YOracle::new(n, k, r, variant, caps)?.hilbert(true)?;
            let top = h.len();
            let counts = y_monomial_counts_tilde(n, top);
            (0..=top)
                .map(|d| {
                    let q = h.get(d).copied().unwrap_or(0);
                    DegreeRow {
                        degree: d,
                        ideal_dim: &counts[d] - BigUint::from(q),
                        monomials: counts[d].clone(),
                        quotient_dim: q,
                    }
                })
                .collect()
        }
    };
    Ok(GradedDimensionReport { n, k, r, variant, setting, rows })
}

/// `Σ q^{comaj}` over ordered set partitions (S) or faces (R).
pub fn hilbert_combinatorial(n: usize, k: usize, r: usize, variant: Variant) -> Result<Vec<usize>> {
    let degrees: Vec<usize> = match variant {
        Variant::S => enumerate_osp(n, k, r)?.iter().map(|p| p.comaj()).collect(),
        Variant::R => enumerate_faces(n, k, r)?.iter().map(|f| f.comaj(k)).collect(),
    };
    let mut out = vec![0usize; degrees.iter().max().map_or(0, |m| m + 1)];
    for d in degrees {
        out[d] += 1;
    }
    Ok(out)
}

/// One instance of a forbidden pattern, with the data its witness needs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PatternInstance {
    Incomparable(Subset, Subset),
    PrefixPower(usize),
    Overpower(Subset),
    LowerPower(Subset, Subset),
    UpperPower(Subset, Subset),
    MiddlePower(Subset, Subset, Subset),
    LongChain(YMonomial),
}

impl PatternInstance {
    pub fn item(&self) -> u8 {
        match self {
            PatternInstance::Incomparable(..) => 1,
            PatternInstance::PrefixPower(_) => 2,
            PatternInstance::Overpower(_) => 3,
            PatternInstance::LowerPower(..) => 4,
            PatternInstance::UpperPower(..) => 5,
            PatternInstance::MiddlePower(..) => 6,
            PatternInstance::LongChain(_) => 7,
        }
    }

    pub fn monomial(&self, r: usize) -> YMonomial {
        let r = r as u32;
        let v = YMonomial::var;
        let pw = YMonomial::power;
        match self {
            PatternInstance::Incomparable(s, t) => v(*s).mul(&v(*t)),
            PatternInstance::PrefixPower(m) => pw(Subset::prefix(*m), r),
            PatternInstance::Overpower(s) => pw(*s, r + 1),
            PatternInstance::LowerPower(s, t) => pw(*s, r).mul(&v(*t)),
            PatternInstance::UpperPower(s, t) => v(*s).mul(&pw(*t, r)),
            PatternInstance::MiddlePower(a, b, c) => v(*a).mul(&pw(*b, r)).mul(&v(*c)),
            PatternInstance::LongChain(y) => y.clone(),
        }
    }
}

/// Every instance of the seven forbidden patterns over `[n]`.
pub fn pattern_instances(n: usize, k: usize, r: usize, variant: Variant) -> Vec<PatternInstance> {
    let thr = n + 1 - k;
    let subsets = Subset::all_nonempty(n);
    let mut out = Vec::new();
    for (i, &s) in subsets.iter().enumerate() {
        for &t in &subsets[i + 1..] {
            if s.incomparable(t) {
                out.push(PatternInstance::Incomparable(s, t));
            }
        }
    }
    for m in thr.max(1)..=n {
        out.push(PatternInstance::PrefixPower(m));
    }
    for &s in &subsets {
        if s.len() >= thr {
            out.push(PatternInstance::Overpower(s));
        }
    }
    for &s in &subsets {
        for &t in &subsets {
            if s == t || !s.is_subset_of(t) {
                continue;
            }
            let diff = t.difference(s);
            if s.len() >= thr && diff.min() > s.max() {
                out.push(PatternInstance::LowerPower(s, t));
            }
            if t.len() >= thr && Subset::prefix(diff.max().unwrap_or(0)).is_subset_of(t) {
                out.push(PatternInstance::UpperPower(s, t));
            }
        }
    }
    for &a in &subsets {
        for &b in &subsets {
            if a == b || !a.is_subset_of(b) || b.len() < thr {
                continue;
            }
            for &c in &subsets {
                if c != b && b.is_subset_of(c) && b.difference(a).max() < c.difference(b).min() {
                    out.push(PatternInstance::MiddlePower(a, b, c));
                }
            }
        }
    }
    for y in multichains_of_degree(n, variant.power(k, r)) {
        out.push(PatternInstance::LongChain(y));
    }
    out
}

/// Recognizes `y` as one of the patterns, trying items in order.
pub fn match_pattern(y: &YMonomial, n: usize, k: usize, r: usize, variant: Variant) -> Option<PatternInstance> {
    if y.max_letter() > n || k > n {
        return None;
    }
    let thr = n + 1 - k;
    let t = y.terms();
    let r32 = r as u32;
    let cands: Vec<PatternInstance> = match t.len() {
        1 => {
            let (s, e) = t[0];
            let mut v = vec![];
            if e == r32 && s.len() >= thr && s == Subset::prefix(s.len()) {
                v.push(PatternInstance::PrefixPower(s.len()));
            }
            if e == r32 + 1 && s.len() >= thr {
                v.push(PatternInstance::Overpower(s));
            }
            v
        }
        2 => {
            // terms are in decreasing variable order: larger set first
            let (big, eb) = t[0];
            let (small, es) = t[1];
            let mut v = vec![];
            if eb == 1 && es == 1 && big.incomparable(small) {
                v.push(PatternInstance::Incomparable(Ord::min(big, small), Ord::max(big, small)));
            }
            if small.is_subset_of(big) && small != big {
                let diff = big.difference(small);
                if es == r32 && eb == 1 && small.len() >= thr && diff.min() > small.max() {
                    v.push(PatternInstance::LowerPower(small, big));
                }
                if es == 1 && eb == r32 && big.len() >= thr && Subset::prefix(diff.max().unwrap_or(0)).is_subset_of(big) {
                    v.push(PatternInstance::UpperPower(small, big));
                }
            }
            v
        }
        3 => {
            let (c, ec) = t[0];
            let (b, eb) = t[1];
            let (a, ea) = t[2];
            let chain = a.is_subset_of(b) && b.is_subset_of(c) && a != b && b != c;
            if chain && ea == 1 && ec == 1 && eb == r32 && b.len() >= thr && b.difference(a).max() < c.difference(b).min() {
                vec![PatternInstance::MiddlePower(a, b, c)]
            } else {
                vec![]
            }
        }
        _ => vec![],
    };
    cands.into_iter().next().or_else(|| {
        (y.is_multichain() && y.degree() == variant.power(k, r)).then(|| PatternInstance::LongChain(y.clone()))
    })
}

/// Raw ideal element for an instance, before discarding monomial-ideal terms.
fn witness_raw(inst: &PatternInstance, n: usize, r: usize) -> Result<YPoly> {
    let v = |s: Subset| YPoly::monomial(YMonomial::var(s));
    let th = |i: usize| theta(i, n, r);
    Ok(match inst {
        PatternInstance::Incomparable(..) | PatternInstance::LongChain(_) => YPoly::monomial(inst.monomial(r)),
        PatternInstance::PrefixPower(m) => th(*m)?,
        PatternInstance::Overpower(s) => v(*s).mul(&th(s.len())?),
        PatternInstance::LowerPower(s, t) => th(s.len())?.mul(&v(*t)),
        PatternInstance::UpperPower(s, t) => v(*s).mul(&th(t.len())?),
        PatternInstance::MiddlePower(a, b, c) => v(*a).mul(&v(*c)).mul(&th(b.len())?),
    })
}

/// An ideal element whose leading monomial is the pattern instance: the
/// recipe's product with its incomparable and too-long-chain terms removed.
/// Those removed terms generate part of the ideal, so the result stays in it.
pub fn witness_for(inst: &PatternInstance, n: usize, k: usize, r: usize, variant: Variant) -> Result<YPoly> {
    let p = variant.power(k, r);
    let target = inst.monomial(r);
    if target.degree() >= p && target.is_multichain() {
        // a long chain divides it
        return Ok(YPoly::monomial(target));
    }
    let mut w = witness_raw(inst, n, r)?;
    if !matches!(inst, PatternInstance::Incomparable(..)) {
        w.retain(|m| m.is_multichain() && m.degree() < p);
    }
    Ok(w)
}

pub fn leading_witness(forbidden: &YMonomial, n: usize, k: usize, r: usize, variant: Variant) -> Result<YPoly> {
    let inst = match_pattern(forbidden, n, k, r, variant)
        .ok_or_else(|| Error::PatternMismatch(format!("{forbidden} is not a forbidden pattern for n={n}, k={k}")))?;
    witness_for(&inst, n, k, r, variant)
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificationReport {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub variant: String,
    pub checks: Vec<Check>,
}

impl CertificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// (a) the three basis constructions agree and the x-images are a basis of
/// each graded piece; (b) every forbidden pattern instance is the leading
/// monomial of an ideal element; (c) the y-oracle's standard monomials are
/// the basis.
pub fn certify_standard_basis(n: usize, k: usize, r: usize, variant: Variant, caps: Caps) -> Result<CertificationReport> {
    let mut checks = Vec::new();
    let basis = match enumerate_basis(n, k, r, variant) {
        Ok(b) => {
            checks.push(Check { name: "triple agreement".into(), passed: true, detail: format!("{} elements", b.len()) });
            b
        }
        Err(Error::Certification(msg)) => {
            checks.push(Check { name: "triple agreement".into(), passed: false, detail: msg });
            return Ok(CertificationReport { n, k, r, variant: variant.to_string(), checks });
        }
        Err(e) => return Err(e),
    };

    // (a) x-images independent, count = quotient dimension per degree
    let mut xo = XOracle::new(n, k, r, variant, caps)?;
    let hilb = xo.hilbert()?;
    let mut by_degree: BTreeMap<usize, Vec<XMonomial>> = BTreeMap::new();
    for b in &basis {
        by_degree.entry(b.x.degree()).or_default().push(b.x.clone());
    }
    let mut bad = Vec::new();
    for d in 0..hilb.len().max(by_degree.keys().next_back().map_or(0, |m| m + 1)) {
        let elems = by_degree.get(&d).cloned().unwrap_or_default();
        let q = hilb.get(d).copied().unwrap_or(0);
        if elems.len() != q {
            bad.push(format!("degree {d}: {} basis elements, quotient dimension {q}", elems.len()));
            continue;
        }
        let std = xo.standard_monomials(d)?;
        let col: HashMap<&XMonomial, usize> = std.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rr = Rref::new();
        for m in &elems {
            let nf = xo.normal_form(&XPoly::monomial(m.clone()))?;
            let v: RatVec = nf.terms_desc().map(|(t, c)| (col[t], c.clone())).collect();
            if !rr.insert(&v) {
                bad.push(format!("degree {d}: image of {m} is dependent"));
                break;
            }
        }
    }
    checks.push(Check {
        name: "x-images form a basis".into(),
        passed: bad.is_empty(),
        detail: if bad.is_empty() { format!("{} degrees", hilb.len()) } else { bad.join("; ") },
    });

    // (b) leading-monomial witnesses
    let mut yo = YOracle::new(n, k, r, variant, caps)?;
    let mut bad = Vec::new();
    let instances = pattern_instances(n, k, r, variant);
    for inst in &instances {
        let target = inst.monomial(r);
        let w = witness_for(inst, n, k, r, variant)?;
        let lead_ok = w.leading().is_some_and(|(m, _)| m == &target);
        let member = yo.in_ideal(&w)?;
        if !lead_ok || !member {
            bad.push(format!("item {} at {target}: leading {:?}, in ideal {member}", inst.item(), w.leading().map(|l| l.0.to_string())));
            if bad.len() > 10 {
                break;
            }
        }
    }
    checks.push(Check {
        name: "leading-monomial witnesses".into(),
        passed: bad.is_empty(),
        detail: if bad.is_empty() { format!("{} instances", instances.len()) } else { bad.join("; ") },
    });

    // (c) y-oracle standard monomials are the basis
    let basis_set: BTreeSet<YMonomial> = basis.iter().map(|b| b.y.clone()).collect();
    let mut oracle_set = BTreeSet::new();
    for mu in yo.all_mu()? {
        oracle_set.extend(yo.standard_monomials_mu(&mu)?);
    }
    let diff: Vec<String> = basis_set.symmetric_difference(&oracle_set).take(5).map(|m| m.to_string()).collect();
    checks.push(Check {
        name: "y-oracle standard monomials".into(),
        passed: diff.is_empty(),
        detail: if diff.is_empty() { format!("{} monomials", oracle_set.len()) } else { format!("differ at {}", diff.join(", ")) },
    });
    Ok(CertificationReport { n, k, r, variant: variant.to_string(), checks })
}

/// A permutation of cycle type `class` whose cycles run over consecutive
/// integers; `sigma[i-1] = σ(i)`.
pub fn class_representative(class: &Partition) -> Vec<usize> {
    let mut sigma = Vec::new();
    let mut start = 1;
    for &len in class.parts() {
        for i in 0..len {
            sigma.push(start + (i + 1) % len);
        }
        start += len;
    }
    sigma
}

/// Ways of computing a graded character.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharacterRoute {
    /// act on standard monomials, expand with moves
    YRewrite,
    /// act on the y-oracle's basis, reduce by linear algebra
    YOracle,
    /// act on Garsia-Stanton x-monomials, expand stratum by stratum
    XRewrite,
    /// act on the x-oracle's basis, reduce by linear algebra
    XOracle,
}

impl CharacterRoute {
    pub const ALL: [CharacterRoute; 4] =
        [CharacterRoute::YRewrite, CharacterRoute::YOracle, CharacterRoute::XRewrite, CharacterRoute::XOracle];
}

#[derive(Clone, Debug, PartialEq)]
pub struct GradedCharacter {
    pub class: Partition,
    /// trace per degree (`deg_tilde` in the y-setting)
    pub traces: Vec<BigRational>,
}

impl GradedCharacter {
    fn trimmed(mut traces: Vec<BigRational>, class: Partition) -> Self {
        while traces.last().is_some_and(|t| t.is_zero()) {
            traces.pop();
        }
        GradedCharacter { class, traces }
    }
}

fn require_r1(r: usize) -> Result<()> {
    if r != 1 {
        return Err(Error::Unsupported("characters are computed for r = 1 only".into()));
    }
    Ok(())
}

fn add_at(v: &mut Vec<BigRational>, d: usize, c: &BigRational) {
    if v.len() <= d {
        v.resize(d + 1, BigRational::zero());
    }
    v[d] += c;
}

/// Graded character of the quotient at `r = 1` along one route.
pub fn graded_character_route(
    n: usize,
    k: usize,
    r: usize,
    variant: Variant,
    route: CharacterRoute,
    class: &Partition,
    caps: Caps,
) -> Result<GradedCharacter> {
    require_r1(r)?;
    if class.size() != n {
        return Err(Error::domain(format!("class {class} is not a partition of {n}")));
    }
    let sigma = class_representative(class);
    let mut traces = Vec::new();
    match route {
        CharacterRoute::YRewrite => {
            for b in crate::basis::basis_from_standard(n, k, 1, variant) {
                let img = reduce_y(&b.permute(&sigma), n, k, 1, variant)?;
                add_at(&mut traces, b.deg_tilde(), &img.coeff(&b));
            }
        }
        CharacterRoute::YOracle => {
            let mut yo = YOracle::new(n, k, 1, variant, caps)?;
            for mu in yo.all_mu()? {
                for b in yo.standard_monomials_mu(&mu)? {
                    let img = yo.normal_form(&YPoly::monomial(b.permute(&sigma)))?;
                    add_at(&mut traces, mu.size(), &img.coeff(&b));
                }
            }
        }
        CharacterRoute::XRewrite => {
            for b in crate::basis::basis_from_standard(n, k, 1, variant) {
                let x = b.phi(n);
                let img = normal_form_x(&x.permute(&sigma), n, k, 1, variant)?;
                add_at(&mut traces, x.degree(), &img.coeff(&x));
            }
        }
        CharacterRoute::XOracle => {
            let mut xo = XOracle::new(n, k, 1, variant, caps)?;
            let top = xo.hilbert()?.len();
            for d in 0..top {
                for b in xo.standard_monomials(d)? {
                    let img = xo.normal_form(&XPoly::monomial(b.permute(&sigma)))?;
                    add_at(&mut traces, d, &img.coeff(&b));
                }
            }
        }
    }
    Ok(GradedCharacter::trimmed(traces, class.clone()))
}

/// Graded character along the move-based route of the given setting.
pub fn graded_character(
    n: usize,
    k: usize,
    r: usize,
    variant: Variant,
    setting: Setting,
    class: &Partition,
    caps: Caps,
) -> Result<GradedCharacter> {
    let route = match setting {
        Setting::X => CharacterRoute::XRewrite,
        Setting::Y => CharacterRoute::YRewrite,
    };
    graded_character_route(n, k, r, variant, route, class, caps)
}

#[derive(Clone, Debug)]
pub struct StratumReport {
    pub mu: Partition,
    pub dimension: usize,
    /// per class (in `Partition::all_of(n)` order)
    pub y_character: Vec<BigRational>,
    pub x_character: Vec<BigRational>,
    pub x_oracle_character: Vec<BigRational>,
}

impl StratumReport {
    pub fn agree(&self) -> bool {
        self.y_character == self.x_character && self.x_character == self.x_oracle_character
    }
}

/// Trace of `σ` on a `σ`-stable subspace of the x-quotient, given through
/// normal-form coordinates on the oracle's standard monomials.
fn subspace_trace(
    xo: &mut XOracle,
    w: &Rref,
    std: &[XMonomial],
    col: &HashMap<XMonomial, usize>,
    sigma: &[usize],
) -> Result<BigRational> {
    let mut tr = BigRational::zero();
    for (i, row) in w.rows().enumerate() {
        let mut img = XPoly::zero();
        for (c, a) in row {
            img.add_term(std[*c].permute(sigma), a.clone());
        }
        let nf = xo.normal_form(&img)?;
        let v: RatVec = nf.terms_desc().map(|(t, c)| (col[t], c.clone())).collect();
        let coords = w
            .coordinates(&v)
            .ok_or_else(|| Error::Certification("filtration piece is not stable under the group".into()))?;
        tr += &coords[i];
    }
    Ok(tr)
}

/// Dimension and character of the `μ`-stratum of the filtration by
/// dominance, computed in the y-setting, in the x-setting by stratified
/// moves, and in the x-oracle as `V_{⊵μ} / V_{▷μ}`.
pub fn filtration_stratum_report(
    n: usize,
    k: usize,
    r: usize,
    variant: Variant,
    mu: &Partition,
    caps: Caps,
) -> Result<StratumReport> {
    require_r1(r)?;
    if mu.largest() > n {
        return Err(Error::domain(format!("{mu} has a part above {n}")));
    }
    let standard: Vec<YMonomial> =
        multichains_with_mu(n, mu).into_iter().filter(|y| is_standard_monomial(y, n, k, 1, variant)).collect();
    let classes = Partition::all_of(n);
    let d = mu.size();
    let mut xo = XOracle::new(n, k, 1, variant, caps)?;
    let std = xo.standard_monomials(d)?;
    let col: HashMap<XMonomial, usize> = std.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let p = variant.power(k, 1) as u32;
    let mut upper = Rref::new();
    let mut strict = Rref::new();
    for m in x_monomials_in_box(n, d, p) {
        let m_mu = m.mu();
        let ge = m_mu.dominates(mu)?;
        if !ge {
            continue;
        }
        let nf = xo.normal_form(&XPoly::monomial(m.clone()))?;
        let v: RatVec = nf.terms_desc().map(|(t, c)| (col[t], c.clone())).collect();
        upper.insert(&v);
        if m_mu != *mu {
            strict.insert(&v);
        }
    }
    let mut y_character = Vec::new();
    let mut x_character = Vec::new();
    let mut x_oracle_character = Vec::new();
    for class in &classes {
        let sigma = class_representative(class);
        let mut ty = BigRational::zero();
        let mut tx = BigRational::zero();
        for b in &standard {
            ty += reduce_y(&b.permute(&sigma), n, k, 1, variant)?.coeff(b);
            let x = b.phi(n);
            tx += reduce_x_stratum(&x.permute(&sigma), n, k, 1, variant)?.same_mu.coeff(&x);
        }
        y_character.push(ty);
        x_character.push(tx);
        let to = subspace_trace(&mut xo, &upper, &std, &col, &sigma)? - subspace_trace(&mut xo, &strict, &std, &col, &sigma)?;
        x_oracle_character.push(to);
    }
    if upper.rank() - strict.rank() != standard.len() {
        return Err(Error::Certification(format!(
            "stratum {mu}: oracle dimension {} but {} standard monomials",
            upper.rank() - strict.rank(),
            standard.len()
        )));
    }
    Ok(StratumReport { mu: mu.clone(), dimension: standard.len(), y_character, x_character, x_oracle_character })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coinvariants_of_s3() {
        let rep = hilbert_oracle(3, 3, 1, Variant::S, Setting::X, Caps::default()).unwrap();
        assert_eq!(rep.coefficients(), vec![1, 2, 2, 1]);
        assert_eq!(rep.rows[0].ideal_dim, BigUint::zero());
        let y = hilbert_oracle(3, 3, 1, Variant::S, Setting::Y, Caps::default()).unwrap();
        assert_eq!(y.coefficients(), vec![1, 2, 2, 1]);
        assert_eq!(hilbert_combinatorial(3, 3, 1, Variant::S).unwrap(), vec![1, 2, 2, 1]);
    }

    #[test]
    fn degenerate_k0() {
        let s = hilbert_oracle(3, 0, 1, Variant::S, Setting::X, Caps::default()).unwrap();
        assert_eq!(s.total(), 0);
        let r = hilbert_oracle(3, 0, 2, Variant::R, Setting::X, Caps::default()).unwrap();
        assert_eq!(r.coefficients(), vec![1]);
        let ry = hilbert_oracle(3, 0, 2, Variant::R, Setting::Y, Caps::default()).unwrap();
        assert_eq!(ry.coefficients(), vec![1]);
        assert_eq!(hilbert_combinatorial(3, 0, 2, Variant::R).unwrap(), vec![1]);
        assert!(hilbert_combinatorial(3, 0, 2, Variant::S).unwrap().is_empty());
    }

    #[test]
    fn slice_dimension_degree_zero() {
        for setting in [Setting::X, Setting::Y] {
            let d = ideal_slice_dimension(3, 2, 1, Variant::R, setting, 0, Caps::default()).unwrap();
            assert!(d.is_zero());
        }
        // degree one in the y-setting, k = n: spanned by θ_1 and θ_2
        let d = ideal_slice_dimension(2, 2, 1, Variant::S, Setting::Y, 1, Caps::default()).unwrap();
        assert_eq!(d, BigUint::from(2u32));
    }

    #[test]
    fn witnesses_small() {
        let rep = certify_standard_basis(3, 2, 1, Variant::S, Caps::default()).unwrap();
        assert!(rep.passed(), "{rep:?}");
        let th = leading_witness(&YMonomial::power(Subset::prefix(3), 2), 3, 2, 2, Variant::R).unwrap();
        assert_eq!(th, theta(3, 3, 2).unwrap());
        let inc = YMonomial::parse("y{1}*y{2}").unwrap();
        assert_eq!(leading_witness(&inc, 3, 1, 1, Variant::R).unwrap(), YPoly::monomial(inc));
        assert!(leading_witness(&YMonomial::parse("y{1}").unwrap(), 3, 1, 1, Variant::R).is_err());
    }

    #[test]
    fn characters_of_s3() {
        let classes = Partition::all_of(3);
        for class in &classes {
            let base = graded_character_route(3, 3, 1, Variant::S, CharacterRoute::YRewrite, class, Caps::default()).unwrap();
            for route in CharacterRoute::ALL {
                let c = graded_character_route(3, 3, 1, Variant::S, route, class, Caps::default()).unwrap();
                assert_eq!(c, base, "{route:?} at {class}");
            }
        }
        assert_eq!(class_representative(&Partition::new(vec![2, 1])), vec![2, 1, 3]);
        assert_eq!(class_representative(&Partition::new(vec![3])), vec![2, 3, 1]);
    }

    #[test]
    fn strata_of_small_case() {
        let mu = Partition::new(vec![2, 1]);
        let s = filtration_stratum_report(3, 2, 1, Variant::S, &mu, Caps::default()).unwrap();
        assert!(s.agree(), "{s:?}");
    }
}
