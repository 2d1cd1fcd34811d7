mod common;

use num_traits::{One, Zero};
use poncelet_core::classify::{
    p_polynomial, pair_classify, psi_values, rees_classify, region, roots_5_closed_form, roots_6_closed_form,
    Center, QuarticTag, Region,
};
use poncelet_core::classify::rees::tag_from_signs;
use poncelet_core::polycore::discriminant::quartic_invariants;
use poncelet_core::polycore::rational::sign;
use poncelet_core::polycore::{int, rat, sturm_real_roots, Rational, UniPolyR};
use proptest::prelude::*;

#[test]
fn closed_forms_agree_with_sturm() {
    let mut rng = common::rng(301);
    for _ in 0..200 {
        let e = common::rand_center_off_sigma(&mut rng);
        for (n, closed) in [(5, roots_5_closed_form(&e).unwrap()), (6, roots_6_closed_form(&e).unwrap())] {
            let sturm = pair_classify(n, &e).unwrap();
            if !closed.is_real() {
                assert_eq!(sturm.count, 0, "n = {n}, E = {e:?}");
                continue;
            }
            let mut expected: Vec<f64> = [closed.plus.re, closed.minus.re]
                .into_iter()
                .filter(|p| p.abs() > 1e-12)
                .collect();
            expected.sort_by(f64::total_cmp);
            expected.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
            let got = sturm.p_roots.values();
            assert_eq!(got.len(), expected.len(), "n = {n}, E = {e:?}: {got:?} vs {expected:?}");
            for (g, w) in got.iter().zip(&expected) {
                assert!((g - w).abs() < 1e-9, "n = {n}, E = {e:?}: {g} vs {w}");
            }
            assert_eq!(closed.is_double(), sturm.p_roots.multiplicities() == vec![2]);
        }
    }
}

#[test]
fn no_four_gon_on_the_latus_rectum_line() {
    let mut rng = common::rng(302);
    for _ in 0..100 {
        let t = common::rand_rat(&mut rng, 3, 20);
        let abs = if t < Rational::zero() { -t.clone() } else { t.clone() };
        if t.is_zero() || abs == Rational::one() {
            continue;
        }
        let e = Center::new(int(0), t);
        let roots = sturm_real_roots(&p_polynomial(4, &e).unwrap(), true).unwrap();
        assert!(roots.is_empty(), "E = {e:?}: {:?}", roots.values());
        assert_eq!(region(4, &e).unwrap(), Region::LatusRectum);
    }
}

#[test]
fn region_counts_match_sturm() {
    let mut rng = common::rng(303);
    for _ in 0..150 {
        let e = common::rand_center_off_sigma(&mut rng);
        for n in 3..=7 {
            let c = pair_classify(n, &e).unwrap();
            if let Some(expected) = c.region.expected_count() {
                assert_eq!(c.count, expected, "n = {n}, E = {e:?}, region {}", c.region);
            }
        }
    }
}

// A centre within 2⁻¹⁰⁰ of the curve Ψ₁ = 0 on the segment from (0, 1/2),
// where Ψ₁ < 0, to (1/2, 0), where Ψ₁ > 0, and its two bracketing centres.
fn near_psi1_curve() -> (Center, Center, Center) {
    let at = |t: &Rational| Center::new(t / int(2), (Rational::one() - t) / int(2));
    let (mut a, mut b) = (int(0), int(1));
    assert!(sign(&psi_values(&at(&a))[0]) < 0 && sign(&psi_values(&at(&b))[0]) > 0);
    for _ in 0..100 {
        let m = (&a + &b) / int(2);
        match sign(&psi_values(&at(&m))[0]) {
            s if s < 0 => a = m,
            s if s > 0 => b = m,
            _ => return (at(&m), at(&a), at(&b)),
        }
    }
    let m = (&a + &b) / int(2);
    (at(&m), at(&a), at(&b))
}

#[test]
fn double_root_on_the_psi1_curve() {
    let (mid, minus, plus) = near_psi1_curve();
    assert_eq!(pair_classify(7, &minus).unwrap().count, 2);
    assert_eq!(pair_classify(7, &plus).unwrap().count, 4);
    assert_eq!(region(7, &minus).unwrap(), Region::R1Minus);
    assert_eq!(region(7, &plus).unwrap(), Region::R1PlusInsideS1);

    // with Disc = 0 imposed, the robust signs of P, D, R, O give the shape
    let q = p_polynomial(7, &mid).unwrap();
    assert_eq!(q.degree(), Some(4));
    let c = |i| q.coeff(i);
    let inv = quartic_invariants(&c(4), &c(3), &c(2), &c(1), &c(0));
    let tag = tag_from_signs(0, sign(&inv.p), sign(&inv.d), sign(&inv.r), sign(&inv.o));
    assert_eq!(tag, QuarticTag::RealDoubleTwoRealSimple);

    // and two of the roots nearly coincide
    let values = sturm_real_roots(&q, true).unwrap().values();
    let closest = values.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
    if values.len() == 4 {
        assert!(closest < 1e-9, "{values:?}");
    } else {
        assert_eq!(values.len(), 2);
    }
}

fn sturm_shape(f: &UniPolyR) -> Vec<u32> {
    let mut m = sturm_real_roots(f, false).unwrap().multiplicities();
    m.sort_unstable_by(|a, b| b.cmp(a));
    m
}

fn quartic_from_factors() -> impl Strategy<Value = UniPolyR> {
    let linear = (-4i64..=4, 1i64..=3).prop_map(|(r, d)| UniPolyR::new(vec![rat(-r, d), int(1)]));
    let quadratic = (-3i64..=3, -3i64..=3).prop_map(|(b, c)| UniPolyR::from_i64(&[c, b, 1]));
    let square = linear.clone().prop_map(|l| l.mul(&l));
    prop_oneof![
        (linear.clone(), linear.clone(), linear.clone(), linear.clone())
            .prop_map(|(a, b, c, d)| a.mul(&b).mul(&c).mul(&d)),
        (quadratic.clone(), linear.clone(), linear.clone()).prop_map(|(q, a, b)| q.mul(&a).mul(&b)),
        (quadratic.clone(), quadratic.clone()).prop_map(|(q, r)| q.mul(&r)),
        (square.clone(), quadratic.clone()).prop_map(|(s, q)| s.mul(&q)),
        (quadratic.clone()).prop_map(|q| q.mul(&q)),
        (linear.clone(), linear).prop_map(|(a, b)| a.mul(&a).mul(&a).mul(&b)),
        (square.clone(), square).prop_map(|(s, t)| s.mul(&t)),
        prop::collection::vec(-6i64..=6, 4).prop_map(|c| UniPolyR::from_i64(&[c[0], c[1], c[2], c[3], 1])),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn rees_shape_matches_sturm(f in quartic_from_factors(), k in 1i64..=5) {
        let f = f.scale(&int(k));
        let c = |i| f.coeff(i);
        let shape = rees_classify(&c(4), &c(3), &c(2), &c(1), &c(0)).unwrap();
        prop_assert_eq!(shape.tag.real_multiplicities(), sturm_shape(&f), "{:?}", f);
    }

    #[test]
    fn lemma_signs_hold(x in (-24i64..=24, 1i64..=12), y in (-24i64..=24, 1i64..=12)) {
        let e = Center::new(rat(x.0, x.1), rat(y.0, y.1));
        prop_assume!(!e.in_sigma());
        let q = p_polynomial(7, &e).unwrap();
        let c = |i| q.coeff(i);
        let inv = quartic_invariants(&c(4), &c(3), &c(2), &c(1), &c(0));
        prop_assert!(sign(&inv.d) < 0);
        if sign(&inv.disc) >= 0 {
            prop_assert!(sign(&inv.p) < 0);
        }
    }
}
