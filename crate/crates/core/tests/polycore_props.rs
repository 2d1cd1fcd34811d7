mod common;

use num_traits::Zero;
use poncelet_core::polycore::discriminant::{discriminant_by_resultant, quartic_disc};
use poncelet_core::polycore::rational::sign;
use poncelet_core::polycore::roots::{root_bound, sign_variations, sturm_sequence};
use poncelet_core::polycore::{
    rat, sturm_real_roots, to_f64, LaurentPoly3, Monomial, PolyError, Rational, UniPolyR,
};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn laurent() -> impl Strategy<Value = LaurentPoly3> {
    prop::collection::vec(((-2i32..=2, 0u32..=3, 0u32..=3), small_rational()), 1..=5).prop_map(|terms| {
        LaurentPoly3::from_terms(terms.into_iter().map(|((p, x, y), c)| (Monomial::new(p, x, y), c)))
    })
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentPoly3> {
    laurent().prop_filter("nonzero", |f| !f.is_zero())
}

fn unipoly(max_degree: usize) -> impl Strategy<Value = UniPolyR> {
    prop::collection::vec(-8i64..=8, 2..=max_degree + 1)
        .prop_map(|c| UniPolyR::from_i64(&c))
        .prop_filter("nonconstant", |f| f.degree().unwrap_or(0) >= 1)
}

// Products of small linear and quadratic factors, so that repeated and
// clustered real roots show up often.
fn factored_unipoly() -> impl Strategy<Value = UniPolyR> {
    let linear = (-5i64..=5, 1i64..=3).prop_map(|(r, d)| UniPolyR::new(vec![rat(-r, d), rat(1, 1)]));
    let quadratic = (-4i64..=4, 1i64..=4).prop_map(|(b, c)| UniPolyR::from_i64(&[c, b, 1]));
    let factor = prop_oneof![linear, quadratic];
    prop::collection::vec(factor, 1..=4).prop_map(|fs| fs.iter().fold(UniPolyR::from_i64(&[1]), |acc, f| acc.mul(f)))
}

fn squarefree_part(f: &UniPolyR) -> UniPolyR {
    f.square_free_decomposition()
        .iter()
        .fold(UniPolyR::from_i64(&[1]), |acc, h| acc.mul(h))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonicalize_is_multiplicative(a in nonzero_laurent(), b in nonzero_laurent()) {
        let direct = (&a * &b).canonicalize().unwrap();
        let via = (&a.canonicalize().unwrap() * &b.canonicalize().unwrap()).canonicalize().unwrap();
        prop_assert_eq!(direct, via);
    }

    #[test]
    fn canonicalize_is_idempotent_and_scale_free(a in nonzero_laurent(), c in small_rational(), k in -3i32..=3) {
        prop_assume!(!c.is_zero());
        let canon = a.canonicalize().unwrap();
        prop_assert_eq!(canon.canonicalize().unwrap(), canon.clone());
        prop_assert_eq!(a.scale(&c).shift_p(k).canonicalize().unwrap(), canon);
    }

    #[test]
    fn exact_division_undoes_multiplication(a in laurent(), b in nonzero_laurent()) {
        let product = &a * &b;
        prop_assert_eq!(product.div_exact(&b).unwrap(), a);
    }

    #[test]
    fn inexact_division_is_reported(a in nonzero_laurent()) {
        // a·(x + 1) + 1 leaves the remainder 1
        let divisor: LaurentPoly3 = "x + 1".parse().unwrap();
        let dividend = &a * &divisor + LaurentPoly3::one();
        prop_assert_eq!(dividend.div_exact(&divisor), Err(PolyError::NotDivisible));
    }

    #[test]
    fn sturm_count_matches_sign_changes(f in prop_oneof![unipoly(6), factored_unipoly()]) {
        let roots = sturm_real_roots(&f, false).unwrap();
        let g = squarefree_part(&f);
        let seq = sturm_sequence(&g);
        let bound = root_bound(&g);
        let expected = sign_variations(&seq, &-bound.clone()) - sign_variations(&seq, &bound);
        prop_assert_eq!(roots.len(), expected);
        prop_assert!(roots.total_multiplicity() as usize <= f.degree().unwrap());
        for r in &roots.roots {
            prop_assert!(r.lo < r.hi);
            prop_assert!(sign(&g.eval(&r.lo)) * sign(&g.eval(&r.hi)) < 0);
            prop_assert!(to_f64(&r.lo) <= r.value && r.value <= to_f64(&r.hi));
        }
        for pair in roots.roots.windows(2) {
            prop_assert!(pair[0].hi <= pair[1].lo);
        }
    }

    #[test]
    fn multiplicities_add_up_for_split_polynomials(rs in prop::collection::vec((-4i64..=4, 1u32..=3), 1..=4)) {
        let mut f = UniPolyR::from_i64(&[1]);
        let mut expected = std::collections::BTreeMap::new();
        for &(r, m) in &rs {
            for _ in 0..m {
                f = f.mul(&UniPolyR::from_i64(&[-r, 1]));
            }
            *expected.entry(r).or_insert(0u32) += m;
        }
        let roots = sturm_real_roots(&f, false).unwrap();
        let got: Vec<u32> = roots.multiplicities();
        let want: Vec<u32> = expected.values().copied().collect();
        prop_assert_eq!(got, want);
        for (root, &r) in roots.roots.iter().zip(expected.keys()) {
            prop_assert!((root.value - r as f64).abs() < 1e-12);
        }
    }
}

#[test]
fn quartic_discriminant_closed_form_matches_resultant() {
    let mut rng = common::rng(101);
    for _ in 0..1000 {
        let c: Vec<Rational> = (0..5).map(|_| common::rand_rat(&mut rng, 5, 7)).collect();
        if c[4].is_zero() {
            continue;
        }
        let f = UniPolyR::new(c.clone());
        let closed = quartic_disc(&c[4], &c[3], &c[2], &c[1], &c[0]);
        assert_eq!(closed, discriminant_by_resultant(&f).unwrap(), "{f:?}");
    }
}
