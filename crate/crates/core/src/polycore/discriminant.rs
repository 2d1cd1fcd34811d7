//! Discriminants and the auxiliary quartic invariants, written once over any
//! exact ring so the same code serves numbers and symbolic coefficients.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::laurent::LaurentPoly3;
use super::matrix::det;
use super::rational::Rational;
use super::ring::Ring;
use super::unipoly::UniPolyR;
use super::PolyError;

fn k<R: Ring>(n: i64) -> R {
    R::from_i64(n)
}

/// `b² − 4ac` for `a·t² + b·t + c`.
pub fn quadratic_disc<R: Ring>(a: &R, b: &R, c: &R) -> R {
    b.clone() * b.clone() - k::<R>(4) * a.clone() * c.clone()
}

/// Discriminant of `a·t³ + b·t² + c·t + d`.
pub fn cubic_disc<R: Ring>(a: &R, b: &R, c: &R, d: &R) -> R {
    let (a, b, c, d) = (a.clone(), b.clone(), c.clone(), d.clone());
    let b2 = b.clone() * b.clone();
    let c2 = c.clone() * c.clone();
    b2.clone() * c2.clone() - k::<R>(4) * a.clone() * c2 * c.clone()
        - k::<R>(4) * b2.clone() * b.clone() * d.clone()
        - k::<R>(27) * a.clone() * a.clone() * d.clone() * d.clone()
        + k::<R>(18) * a * b * c * d
}

/// Discriminant and the four auxiliary invariants of a quartic
/// `A·t⁴ + B·t³ + C·t² + D·t + E`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuarticInvariants<R> {
    pub disc: R,
    /// `8AC − 3B²`
    pub p: R,
    /// `−3B⁴ − 16A²C² + 64A³E + 16AB²C − 16A²BD`
    pub d: R,
    /// `B³ + 8A²D − 4ABC`
    pub r: R,
    /// `C² + 12AE − 3BD`
    pub o: R,
}

/// Closed-form quartic discriminant.
pub fn quartic_disc<R: Ring>(a: &R, b: &R, c: &R, d: &R, e: &R) -> R {
    // monomial list: (coefficient, powers of A, B, C, D, E)
    const TERMS: [(i64, [u32; 5]); 16] = [
        (1, [0, 2, 2, 2, 0]),
        (-4, [1, 0, 3, 2, 0]),
        (-4, [0, 3, 0, 3, 0]),
        (18, [1, 1, 1, 3, 0]),
        (-27, [2, 0, 0, 4, 0]),
        (-4, [0, 2, 3, 0, 1]),
        (16, [1, 0, 4, 0, 1]),
        (18, [0, 3, 1, 1, 1]),
        (-80, [1, 1, 2, 1, 1]),
        (-6, [1, 2, 0, 2, 1]),
        (144, [2, 0, 1, 2, 1]),
        (-27, [0, 4, 0, 0, 2]),
        (144, [1, 2, 1, 0, 2]),
        (-128, [2, 0, 2, 0, 2]),
        (-192, [2, 1, 0, 1, 2]),
        (256, [3, 0, 0, 0, 3]),
    ];
    let vars = [a, b, c, d, e];
    let powers: Vec<Vec<R>> = vars
        .iter()
        .map(|v| {
            let mut out = vec![R::one()];
            for i in 0..4 {
                out.push(out[i].clone() * (*v).clone());
            }
            out
        })
        .collect();
    let mut acc = R::zero();
    for (coef, exps) in TERMS {
        let mut term = k::<R>(coef);
        for (i, &e) in exps.iter().enumerate() {
            if e > 0 {
                term = term * powers[i][e as usize].clone();
            }
        }
        acc = acc + term;
    }
    acc
}

pub fn quartic_invariants<R: Ring>(a: &R, b: &R, c: &R, d: &R, e: &R) -> QuarticInvariants<R> {
    let (a_, b_, c_, d_, e_) = (a.clone(), b.clone(), c.clone(), d.clone(), e.clone());
    let a2 = a_.clone() * a_.clone();
    let b2 = b_.clone() * b_.clone();
    let p = k::<R>(8) * a_.clone() * c_.clone() - k::<R>(3) * b2.clone();
    let dd = -(k::<R>(3) * b2.clone() * b2.clone()) - k::<R>(16) * a2.clone() * c_.clone() * c_.clone()
        + k::<R>(64) * a2.clone() * a_.clone() * e_.clone()
        + k::<R>(16) * a_.clone() * b2.clone() * c_.clone()
        - k::<R>(16) * a2.clone() * b_.clone() * d_.clone();
    let r = b2.clone() * b_.clone() + k::<R>(8) * a2 * d_.clone()
        - k::<R>(4) * a_.clone() * b_.clone() * c_.clone();
    let o = c_.clone() * c_.clone() + k::<R>(12) * a_ * e_ - k::<R>(3) * b_ * d_;
    QuarticInvariants {
        disc: quartic_disc(a, b, c, d, e),
        p,
        d: dd,
        r,
        o,
    }
}

/// Resultant of two univariate polynomials as the Sylvester determinant.
pub fn resultant(f: &UniPolyR, g: &UniPolyR) -> Rational {
    let (m, n) = match (f.degree(), g.degree()) {
        (Some(m), Some(n)) => (m, n),
        _ => return Rational::zero(),
    };
    if m + n == 0 {
        return Rational::one();
    }
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    // rows of f shifted n times, then g shifted m times; descending powers
    for (poly, deg, shifts) in [(f, m, n), (g, n, m)] {
        for s in 0..shifts {
            let mut row = vec![Rational::zero(); size];
            for i in 0..=deg {
                row[s + i] = poly.coeff(deg - i);
            }
            rows.push(row);
        }
    }
    det(&rows)
}

/// Discriminant via `(−1)^{n(n−1)/2} · Res(f, f′) / lead(f)`.
pub fn discriminant_by_resultant(f: &UniPolyR) -> Result<Rational, PolyError> {
    let n = f.degree().ok_or(PolyError::UnsupportedDegree(0))?;
    if n < 1 {
        return Err(PolyError::UnsupportedDegree(n));
    }
    let res = resultant(f, &f.derivative()) / f.leading().unwrap();
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -res } else { res })
}

/// Exact discriminant of a polynomial of degree 2, 3 or 4. For quartics the
/// closed formula is cross-checked against the resultant route.
pub fn discriminant(f: &UniPolyR) -> Result<Rational, PolyError> {
    let c = |i| f.coeff(i);
    match f.degree() {
        Some(2) => Ok(quadratic_disc(&c(2), &c(1), &c(0))),
        Some(3) => Ok(cubic_disc(&c(3), &c(2), &c(1), &c(0))),
        Some(4) => {
            let closed = quartic_disc(&c(4), &c(3), &c(2), &c(1), &c(0));
            let via_res = discriminant_by_resultant(f)?;
            if closed != via_res {
                return Err(PolyError::InconsistentDiscriminant);
            }
            Ok(closed)
        }
        other => Err(PolyError::UnsupportedDegree(other.unwrap_or(0))),
    }
}

/// Coefficients `[c0, c1, ...]` of a polynomial viewed as a polynomial in
/// `p` over `Q[x, y]`. Fails on negative `p` exponents.
pub fn p_coefficients(f: &LaurentPoly3) -> Result<Vec<LaurentPoly3>, PolyError> {
    let by_power: BTreeMap<i32, LaurentPoly3> = f.coefficients_in_p();
    let Some((&lo, _)) = by_power.iter().next() else {
        return Ok(Vec::new());
    };
    if lo < 0 {
        return Err(PolyError::NegativePExponent);
    }
    let top = *by_power.keys().next_back().unwrap() as usize;
    Ok((0..=top)
        .map(|i| by_power.get(&(i as i32)).cloned().unwrap_or_else(LaurentPoly3::zero))
        .collect())
}

/// Symbolic discriminant in `p` of a polynomial of `p`-degree 2, 3 or 4.
pub fn symbolic_disc_p(f: &LaurentPoly3) -> Result<LaurentPoly3, PolyError> {
    let c = p_coefficients(f)?;
    match c.len() {
        3 => Ok(quadratic_disc(&c[2], &c[1], &c[0])),
        4 => Ok(cubic_disc(&c[3], &c[2], &c[1], &c[0])),
        5 => Ok(quartic_disc(&c[4], &c[3], &c[2], &c[1], &c[0])),
        n => Err(PolyError::UnsupportedDegree(n.saturating_sub(1))),
    }
}

/// Symbolic quartic invariants in `p` of a polynomial of `p`-degree 4.
pub fn symbolic_quartic_invariants(
    f: &LaurentPoly3,
) -> Result<QuarticInvariants<LaurentPoly3>, PolyError> {
    let c = p_coefficients(f)?;
    if c.len() != 5 {
        return Err(PolyError::UnsupportedDegree(c.len().saturating_sub(1)));
    }
    Ok(quartic_invariants(&c[4], &c[3], &c[2], &c[1], &c[0]))
}
