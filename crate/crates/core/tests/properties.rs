use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use coinv::basis::{gd_from_multichain, is_standard_monomial, tilde_b_gd};
use coinv::combinatorics::{enumerate_faces, enumerate_osp, ColoredWord, Face, Osp};
use coinv::ideal::Variant;
use coinv::monomial::{straighten, straighten_with, XMonomial, YMonomial};
use coinv::oracle::{Caps, XOracle, YOracle};
use coinv::poly::{XPoly, YPoly};
use coinv::rewrite::{normal_form_x, reduce_y, reduce_y_traced, Strategy as MoveStrategy};
use coinv::subset::Subset;
use coinv::symfun::{ribbon_to_schur_by_inversion, ribbon_to_schur_by_tableaux, Composition};
use coinv::verify::{random_multichain, random_x_monomial};

fn config(cases: u32) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(0x5eed), failure_persistence: None, ..Config::default() }
}

fn y_monomial(n: usize) -> impl Strategy<Value = YMonomial> {
    prop::collection::vec((1u32..(1 << n), 1u32..4), 0..5)
        .prop_map(|v| YMonomial::from_pairs(v.into_iter().map(|(b, e)| (Subset::from_bits(b), e))))
}

fn x_monomial(n: usize) -> impl Strategy<Value = XMonomial> {
    prop::collection::vec(0u32..5, n).prop_map(XMonomial::new)
}

/// (n, k, r, variant) with small oracles.
fn params() -> impl Strategy<Value = (usize, usize, usize, Variant)> {
    (1usize..=4, 1usize..=2, prop_oneof![Just(Variant::S), Just(Variant::R)])
        .prop_flat_map(|(n, r, v)| (Just(n), 0..=n, Just(if n == 4 { 1 } else { r }), Just(v)))
}

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn y_order_is_a_monomial_order(a in y_monomial(4), b in y_monomial(4), c in y_monomial(4)) {
        prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
        if a < b && b < c {
            prop_assert!(a < c);
        }
        if a < b {
            prop_assert!(a.mul(&c) < b.mul(&c));
        }
        prop_assert!(YMonomial::one() <= a);
    }

    #[test]
    fn x_order_is_a_monomial_order(a in x_monomial(4), b in x_monomial(4), c in x_monomial(4)) {
        prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
        if a < b && b < c {
            prop_assert!(a < c);
        }
        if a < b {
            prop_assert!(a.mul(&c) < b.mul(&c));
        }
    }

    #[test]
    fn straightening_is_confluent_and_raises_mu(a in y_monomial(4)) {
        let first = straighten_with(&a, |p| p[0]);
        let last = straighten_with(&a, |p| p[p.len() - 1]);
        prop_assert_eq!(&first, &last);
        prop_assert_eq!(&first, &straighten(&a));
        prop_assert!(first.is_multichain());
        prop_assert_eq!(first.phi(4), a.phi(4));
        prop_assert!(first.mu().dominates(&a.mu()).unwrap());
    }

    #[test]
    fn monomials_round_trip(a in y_monomial(5), x in x_monomial(5)) {
        prop_assert_eq!(YMonomial::parse(&a.to_string()).unwrap(), a);
        prop_assert_eq!(XMonomial::parse(&x.to_string(), 5).unwrap(), x);
    }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn partitions_and_faces_round_trip(n in 1usize..=4, r in 1usize..=2, pick in any::<prop::sample::Index>()) {
        for k in 0..=n {
            let osps = enumerate_osp(n, k, r).unwrap();
            if !osps.is_empty() {
                let p = pick.get(&osps);
                prop_assert_eq!(&Osp::parse(&p.to_string(), n, k, r).unwrap(), p);
                prop_assert_eq!(&Osp::parse_blocks(&p.blocks_string(k).unwrap(), n, r).unwrap(), p);
                prop_assert_eq!(&ColoredWord::parse(&p.word().to_string(), n, r).unwrap(), p.word());
            }
            let faces = enumerate_faces(n, k, r).unwrap();
            let f = pick.get(&faces);
            prop_assert_eq!(&Face::parse(&f.to_string(), n, k, r).unwrap(), f);
        }
    }

    #[test]
    fn gd_round_trip(seed in any::<u64>(), n in 1usize..=5, r in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let y = random_multichain(&mut rng, n, 8);
        let p = gd_from_multichain(&y, n, r).unwrap();
        prop_assert_eq!(tilde_b_gd(&p.word, &p.d).unwrap(), y);
    }

    #[test]
    fn y_reduction_terminates_sound_and_keeps_mu(seed in any::<u64>(), (n, k, r, v) in params()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = v.power(k, r);
        let y = random_multichain(&mut rng, n, p + r + 1);
        let out = reduce_y(&y, n, k, r, v).unwrap();
        for m in out.monomials() {
            prop_assert!(is_standard_monomial(m, n, k, r, v));
            prop_assert_eq!(m.mu(), y.mu());
        }
        for s in MoveStrategy::ALL {
            prop_assert_eq!(&reduce_y_traced(&y, n, k, r, v, s).unwrap().result, &out);
        }
        let mut yo = YOracle::new(n, k, r, v, Caps::default()).unwrap();
        prop_assert!(yo.in_ideal(&YPoly::monomial(y.clone()).sub(&out)).unwrap());
        prop_assert_eq!(yo.normal_form(&YPoly::monomial(y)).unwrap(), yo.normal_form(&out).unwrap());
    }

    #[test]
    fn x_normal_form_is_sound(seed in any::<u64>(), (n, k, r, v) in params()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_x_monomial(&mut rng, n, v.power(k, r) as u32);
        let nf = normal_form_x(&x, n, k, r, v).unwrap();
        let mut xo = XOracle::new(n, k, r, v, Caps::default()).unwrap();
        prop_assert!(xo.in_ideal(&XPoly::monomial(x).sub(&nf)).unwrap());
    }

    #[test]
    fn ribbon_routes_agree(bits in 0u32..64) {
        let d: Vec<usize> = (0..6).filter(|i| bits & (1 << i) != 0).map(|i| i + 1).collect();
        let alpha = Composition::from_descent_set(&d, 7).unwrap();
        prop_assert_eq!(ribbon_to_schur_by_tableaux(&alpha).unwrap(), ribbon_to_schur_by_inversion(&alpha).unwrap());
    }
}
