mod common;

use num_complex::Complex64;
use num_traits::{One, Zero};
use poncelet_core::cayley::{atilde_sequence, hankel_raw, locus, locus_at_p, proper_divisors};
use poncelet_core::polycore::{to_f64, Rational};

#[test]
fn series_entries_are_symmetric() {
    let seq = atilde_sequence(14);
    for (k, a) in seq.entries.iter().enumerate() {
        assert_eq!(a.flip_signs(false, false, true), *a, "Ã{} not even in y", k + 1);
        assert_eq!(a.flip_signs(true, true, false), *a, "Ã{} changes under (p, x) -> (-p, -x)", k + 1);
    }
    for n in 3..=9 {
        let h = hankel_raw(n);
        assert_eq!(h.flip_signs(false, false, true), h);
        assert_eq!(h.flip_signs(true, true, false), h);
    }
}

#[test]
fn raw_determinants_contain_their_divisors() {
    for (n, k) in [(6, 3), (8, 4), (9, 3), (12, 4), (12, 6)] {
        let q = hankel_raw(n).div_exact(&hankel_raw(k));
        assert!(q.is_ok(), "hankel_raw({n}) / hankel_raw({k}): {q:?}");
    }
    assert!(hankel_raw(7).div_exact(&hankel_raw(3)).is_err());
    assert!(hankel_raw(5).div_exact(&hankel_raw(4)).is_err());
}

#[test]
fn divisor_factors_are_removed() {
    assert_eq!(proper_divisors(12), vec![3, 4, 6]);
    assert_eq!(locus(12).unwrap().divisors_removed, vec![3, 4, 6]);
    assert!(locus(7).unwrap().divisors_removed.is_empty());
    for n in 6..=12 {
        let l = locus(n).unwrap();
        for &k in &l.divisors_removed {
            // the remaining factor is no longer divisible by Qᵏ
            assert!(l.canonical.div_exact(&locus(k).unwrap().canonical).is_err(), "Q{n} still contains Q{k}");
        }
    }
}

// det(λ·C + P) for the circle C centred at (x, y) and the parabola P, as
// cubic coefficients in λ, from the 3×3 conic matrices.
fn pencil_numeric(p: f64, x: f64, y: f64) -> [f64; 4] {
    let circle = [[1.0, 0.0, -x], [0.0, 1.0, -y], [-x, -y, x * x + y * y - 1.0]];
    let parabola = [[0.0, 0.0, -p], [0.0, 1.0, 0.0], [-p, 0.0, -p * p]];
    // entries are linear polynomials c0 + c1·λ
    let e = |i: usize, j: usize| [parabola[i][j], circle[i][j]];
    let mul = |a: &[f64], b: &[f64]| {
        let mut out = vec![0.0; a.len() + b.len() - 1];
        for (i, u) in a.iter().enumerate() {
            for (j, v) in b.iter().enumerate() {
                out[i + j] += u * v;
            }
        }
        out
    };
    let minor = |r: usize, c: usize| {
        let rows: Vec<usize> = (0..3).filter(|&i| i != r).collect();
        let cols: Vec<usize> = (0..3).filter(|&j| j != c).collect();
        let a = mul(&e(rows[0], cols[0]), &e(rows[1], cols[1]));
        let b = mul(&e(rows[0], cols[1]), &e(rows[1], cols[0]));
        [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
    };
    let mut out = [0.0; 4];
    for c in 0..3 {
        let sign = if c % 2 == 0 { 1.0 } else { -1.0 };
        let term = mul(&e(0, c), &minor(0, c));
        for (k, t) in term.iter().enumerate() {
            out[k] += sign * t;
        }
    }
    out
}

// Taylor coefficients of √f at λ = 0 on the branch √f(0) = i·p.
fn sqrt_series(f: [f64; 4], p: f64, len: usize) -> Vec<Complex64> {
    let mut a = vec![Complex64::new(0.0, p)];
    for k in 1..len {
        let fk = if k < 4 { f[k] } else { 0.0 };
        let conv: Complex64 = (1..k).map(|l| a[l] * a[k - l]).sum();
        a.push((fk - conv) / (2.0 * a[0]));
    }
    a
}

fn det(mut m: Vec<Vec<Complex64>>) -> Complex64 {
    let n = m.len();
    let mut acc = Complex64::new(1.0, 0.0);
    for c in 0..n {
        let pivot = (c..n).max_by(|&i, &j| m[i][c].norm().total_cmp(&m[j][c].norm())).unwrap();
        if m[pivot][c].norm() == 0.0 {
            return Complex64::zero();
        }
        if pivot != c {
            m.swap(pivot, c);
            acc = -acc;
        }
        acc *= m[c][c];
        for r in c + 1..n {
            let factor = m[r][c] / m[c][c];
            let (top, bottom) = m.split_at_mut(r);
            for (target, v) in bottom[0][c..].iter_mut().zip(&top[c][c..]) {
                *target -= factor * v;
            }
        }
    }
    acc
}

#[test]
fn determinants_match_numeric_series() {
    let mut rng = common::rng(201);
    for sample in 0..100 {
        let p = loop {
            let p = common::rand_rat(&mut rng, 3, 6);
            if !p.is_zero() {
                break p;
            }
        };
        let (x, y) = (common::rand_rat(&mut rng, 2, 8), common::rand_rat(&mut rng, 2, 8));
        let (pf, xf, yf) = (to_f64(&p), to_f64(&x), to_f64(&y));
        let series = sqrt_series(pencil_numeric(pf, xf, yf), pf, 16);
        for n in 3..=9u32 {
            let (first, size) = if n % 2 == 1 { (2, (n as usize - 1) / 2) } else { (3, n as usize / 2 - 1) };
            let m: Vec<Vec<Complex64>> = (0..size)
                .map(|i| (0..size).map(|j| series[first + i + j]).collect())
                .collect();
            // Hadamard's bound: the natural size of the determinant, also
            // when it vanishes exactly
            let hadamard: f64 = m
                .iter()
                .map(|row| row.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt())
                .product::<f64>()
                * series[0].norm().powi(size as i32);
            let numeric = det(m) * series[0].powu(size as u32);
            let exact = to_f64(&hankel_raw(n).eval(&p, &x, &y).unwrap());
            let scale = exact.abs().max(hadamard);
            assert!(
                (numeric - exact).norm() <= 1e-9 * scale,
                "sample {sample}, n = {n}: numeric {numeric}, exact {exact} at p = {p}, E = ({x}, {y})"
            );
        }
    }
}

#[test]
fn substituting_p_commutes_with_evaluation() {
    let mut rng = common::rng(202);
    for _ in 0..40 {
        let p = common::rand_rat(&mut rng, 3, 5);
        if p.is_zero() {
            continue;
        }
        let (x, y) = (common::rand_rat(&mut rng, 2, 5), common::rand_rat(&mut rng, 2, 5));
        let shifted = &x + Rational::one();
        for n in 3..=8 {
            let q = &locus(n).unwrap().canonical;
            let qp = locus_at_p(n, &p).unwrap();
            let at = |xv: &Rational| (q.eval(&p, xv, &y).unwrap(), qp.eval(&Rational::zero(), xv, &y).unwrap());
            // the two canonical forms agree up to one nonzero rational factor
            let (full, fixed) = at(&x);
            let (full2, fixed2) = at(&shifted);
            assert_eq!(full.is_zero(), fixed.is_zero());
            assert_eq!(full2.is_zero(), fixed2.is_zero());
            if !fixed.is_zero() && !fixed2.is_zero() {
                assert_eq!(full / fixed, full2 / fixed2, "n = {n}");
            }
        }
    }
}
