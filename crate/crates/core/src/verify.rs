//! The verification suite behind `coinv verify`: certification, Hilbert
//! series agreement, characters and strata at `r = 1`, and randomized
//! checks of the rewriting engine against the linear-algebra oracles.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::combinatorics::{binomial, count_faces, count_osp, enumerate_osp, factorial};
use crate::error::Result;
use crate::ideal::{Setting, Variant};
use crate::monomial::{XMonomial, YMonomial};
use crate::oracle::{
    certify_standard_basis, filtration_stratum_report, graded_character_route, hilbert_combinatorial, hilbert_oracle,
    Caps, CharacterRoute, Check, XOracle, YOracle,
};
use crate::partition::Partition;
use crate::poly::{XPoly, YPoly};
use crate::rewrite::{is_standard_poly, normal_form_x, reduce_y};
use crate::subset::Subset;
use crate::symfun::{graded_frobenius, graded_frobenius_formula, MAX_SYM_N};

#[derive(Clone, Copy, Debug, Serialize)]
pub struct VerifyOptions {
    /// run the `r = 1` representation checks and randomized checks too
    pub all: bool,
    pub seed: u64,
    pub samples: usize,
    pub caps: Caps,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { all: false, seed: 0, samples: 40, caps: Caps::default() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub variant: String,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n, "k": self.k, "r": self.r, "variant": self.variant,
            "passed": self.passed(),
            "checks": self.checks,
        })
    }
}

fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), passed, detail: detail.into() }
}

/// A random multichain `y_{S_1} ⋯ y_{S_t}` over `[n]` with `t < max_len`.
pub fn random_multichain(rng: &mut impl Rng, n: usize, max_len: usize) -> YMonomial {
    let t = rng.gen_range(0..max_len.max(1));
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.shuffle(rng);
    let mut sizes: Vec<usize> = (0..t).map(|_| rng.gen_range(1..=n)).collect();
    sizes.sort_unstable();
    let mut y = YMonomial::one();
    for s in sizes {
        let sub = Subset::from_elems(perm[..s].iter().copied()).expect("letters within range");
        y = y.mul(&YMonomial::var(sub));
    }
    y
}

/// A random x-monomial with exponents below `bound`.
pub fn random_x_monomial(rng: &mut impl Rng, n: usize, bound: u32) -> XMonomial {
    XMonomial::new((0..n).map(|_| if bound == 0 { 0 } else { rng.gen_range(0..bound) }).collect())
}

fn randomized_checks(n: usize, k: usize, r: usize, variant: Variant, opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let p = variant.power(k, r);
    let mut yo = YOracle::new(n, k, r, variant, opts.caps)?;
    let mut xo = XOracle::new(n, k, r, variant, opts.caps)?;
    let mut y_bad = Vec::new();
    let mut x_bad = Vec::new();
    for _ in 0..opts.samples {
        let y = random_multichain(&mut rng, n, p + r + 1);
        let out = reduce_y(&y, n, k, r, variant)?;
        let sound = yo.in_ideal(&YPoly::monomial(y.clone()).sub(&out))?;
        let standard = is_standard_poly(&out, n, k, r, variant);
        let same_mu = out.monomials().all(|m| m.mu() == y.mu());
        if !(sound && standard && same_mu) {
            y_bad.push(format!("{y}: sound {sound}, standard {standard}, mu kept {same_mu}"));
        }
        let x = random_x_monomial(&mut rng, n, p as u32);
        let nf = normal_form_x(&x, n, k, r, variant)?;
        let diff = xo.normal_form(&XPoly::monomial(x.clone()).sub(&nf))?;
        if !diff.is_zero() {
            x_bad.push(format!("{x}"));
        }
    }
    Ok(vec![
        check(
            format!("random y-reductions (seed {})", opts.seed),
            y_bad.is_empty(),
            if y_bad.is_empty() { format!("{} samples", opts.samples) } else { y_bad.join("; ") },
        ),
        check(
            format!("random x-normal forms (seed {})", opts.seed),
            x_bad.is_empty(),
            if x_bad.is_empty() { format!("{} samples", opts.samples) } else { format!("mismatch at {}", x_bad.join(", ")) },
        ),
    ])
}

fn representation_checks(n: usize, k: usize, variant: Variant, caps: Caps) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let classes = Partition::all_of(n);
    let mut x_chars = Vec::new();
    for class in &classes {
        let routes = CharacterRoute::ALL
            .iter()
            .map(|&rt| graded_character_route(n, k, 1, variant, rt, class, caps))
            .collect::<Result<Vec<_>>>()?;
        let agree = routes.windows(2).all(|w| w[0] == w[1]);
        let shown: Vec<String> = routes[0].traces.iter().map(|t| t.to_string()).collect();
        checks.push(check(format!("graded character at class {class}"), agree, format!("[{}]", shown.join(","))));
        x_chars.push(routes[3].clone());
    }

    let yo = YOracle::new(n, k, 1, variant, caps)?;
    let mut agree_all = true;
    let mut detail = Vec::new();
    let mut count = 0;
    for mu in yo.all_mu()? {
        let rep = filtration_stratum_report(n, k, 1, variant, &mu, caps)?;
        if rep.dimension == 0 {
            continue;
        }
        count += 1;
        if !rep.agree() {
            agree_all = false;
            detail.push(format!("stratum {mu} differs"));
        }
    }
    checks.push(check(
        "stratum characters",
        agree_all,
        if agree_all { format!("{count} strata") } else { detail.join("; ") },
    ));

    if k == n {
        let nfact = BigRational::from_integer(BigInt::from(factorial(n)));
        let ok = x_chars.iter().all(|g| {
            let total: BigRational = g.traces.iter().fold(BigRational::zero(), |a, b| a + b);
            if g.class.parts().iter().all(|&p| p == 1) {
                total == nfact
            } else {
                total.is_zero()
            }
        });
        checks.push(check("ungraded character is regular", ok, format!("{n}! at the identity, 0 elsewhere")));
    }

    if variant == Variant::S && n <= MAX_SYM_N {
        let from_chars = graded_frobenius(n, k, variant, CharacterRoute::XOracle, caps)?;
        let formula = graded_frobenius_formula(n, k)?;
        checks.push(check(
            "Frobenius formula equals character decomposition",
            from_chars == formula,
            format!("{} Schur terms", formula.len()),
        ));
    }

    if variant == Variant::S && k > 0 {
        let base = (n - k) * (k - 1) + binomial(k, 2) as usize;
        let mut bad = Vec::new();
        let osps = enumerate_osp(n, k, 1)?;
        for p in &osps {
            if p.comaj() + p.hrs_maj(k)? != base {
                bad.push(p.to_string());
            }
        }
        checks.push(check(
            "comaj plus hrs_maj is constant",
            bad.is_empty(),
            if bad.is_empty() { format!("{} partitions, constant {base}", osps.len()) } else { bad.join(", ") },
        ));
    }
    Ok(checks)
}

/// Runs the suite. With `opts.all` it adds the representation checks at
/// `r = 1` and the randomized checks.
pub fn verify(n: usize, k: usize, r: usize, variant: Variant, opts: &VerifyOptions) -> Result<VerifyReport> {
    let caps = opts.caps;
    let mut checks: Vec<Check> = certify_standard_basis(n, k, r, variant, caps)?
        .checks
        .into_iter()
        .map(|c| Check { name: format!("certification: {}", c.name), ..c })
        .collect();

    let comb = hilbert_combinatorial(n, k, r, variant)?;
    for setting in [Setting::X, Setting::Y] {
        let h = hilbert_oracle(n, k, r, variant, setting, caps)?.coefficients();
        checks.push(check(
            format!("Hilbert series: {setting}-oracle equals comaj generating function"),
            h == comb,
            h.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","),
        ));
    }
    let expected = match variant {
        Variant::S => count_osp(n, k, r),
        Variant::R => count_faces(n, k, r),
    };
    let total: usize = comb.iter().sum();
    checks.push(check("total dimension", total as u128 == expected, format!("{total} (closed form {expected})")));

    if opts.all {
        if r == 1 {
            checks.extend(representation_checks(n, k, variant, caps)?);
        }
        checks.extend(randomized_checks(n, k, r, variant, opts)?);
    }
    Ok(VerifyReport { n, k, r, variant: variant.to_string(), checks })
}
