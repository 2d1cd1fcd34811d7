//! Cayley conditions for the unit circle centred at `E = (x, y)` and the
//! parabola `y² = 2px + p²`.
//!
//! The characteristic cubic of the pencil is
//! `f(λ) = Δ₁λ³ + Θ₁λ² + Θ₂λ + Δ₂`. Writing `√f = Σ Aₖλᵏ` and
//! `Ãₖ = k!·A₀·Aₖ`, the `Ãₖ` satisfy a recursion that only involves
//! `A₀² = Δ₂ = −p²`, so every entry is an exact polynomial in `x, y` and a
//! Laurent polynomial in `p`. Hankel determinants in the `Ãₖ/k!` vanish
//! exactly on the `n`-Poncelet configurations.

use std::sync::{OnceLock, RwLock};

use num_traits::Zero;

use crate::polycore::{det, int, rat, LaurentPoly3, Monomial, PolyError, Rational};

/// Largest supported polygon size.
pub const MAX_N: u32 = 12;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CayleyError {
    #[error("n = {0} is outside 3..=12")]
    UnsupportedN(u32),
    #[error("p = 0 is a degenerate parabola")]
    DegenerateParabola,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Coefficients of `det(λ·D + P) = Δ₁λ³ + Θ₁λ² + Θ₂λ + Δ₂`.
#[derive(Clone, Debug, PartialEq)]
pub struct PencilCoeffs {
    pub delta1: LaurentPoly3,
    pub theta1: LaurentPoly3,
    pub theta2: LaurentPoly3,
    pub delta2: LaurentPoly3,
}

fn term(c: i64, p: i32, x: u32, y: u32) -> LaurentPoly3 {
    LaurentPoly3::monomial(int(c), Monomial::new(p, x, y))
}

pub fn pencil_coeffs() -> PencilCoeffs {
    PencilCoeffs {
        delta1: LaurentPoly3::constant(int(-1)),
        theta1: term(-1, 2, 0, 0) + term(-2, 1, 1, 0) + term(1, 0, 0, 2) + term(-1, 0, 0, 0),
        theta2: term(-2, 2, 0, 0) + term(-2, 1, 1, 0),
        delta2: term(-1, 2, 0, 0),
    }
}

impl PencilCoeffs {
    /// `(Δ₁, Θ₁, Θ₂, Δ₂)` at a point.
    pub fn eval(&self, p: &Rational, x: &Rational, y: &Rational) -> [Rational; 4] {
        [&self.delta1, &self.theta1, &self.theta2, &self.delta2]
            .map(|c| c.eval(p, x, y).expect("pencil coefficients have no negative p powers"))
    }

    /// `f^{(k)}(0)` as a polynomial.
    fn derivative_at_zero(&self, k: usize) -> LaurentPoly3 {
        match k {
            0 => self.delta2.clone(),
            1 => self.theta2.clone(),
            2 => self.theta1.scale(&int(2)),
            3 => self.delta1.scale(&int(6)),
            _ => LaurentPoly3::zero(),
        }
    }
}

/// `Ã₁, …, Ã_K`; `entries[k - 1]` holds `Ãₖ`.
#[derive(Clone, Debug, PartialEq)]
pub struct AtildeSequence {
    pub entries: Vec<LaurentPoly3>,
}

impl AtildeSequence {
    /// `Ãₖ` for `k ≥ 1`.
    pub fn get(&self, k: usize) -> &LaurentPoly3 {
        &self.entries[k - 1]
    }
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

// Grows `seq` (holding Ã₁..Ã_len) by one entry.
fn extend_atilde(pencil: &PencilCoeffs, seq: &mut Vec<LaurentPoly3>) {
    let k = seq.len();
    // 1/Δ₂ = −p⁻²
    let inv_delta2 = LaurentPoly3::monomial(int(-1), Monomial::new(-2, 0, 0));
    let mut sum = LaurentPoly3::zero();
    for l in 1..=k {
        sum += &(&seq[l - 1] * &seq[k - l]).scale(&int(binomial(k, l)));
    }
    let next = pencil.derivative_at_zero(k + 1).scale(&rat(1, 2)) - sum * inv_delta2;
    seq.push(next);
}

fn atilde_memo() -> &'static RwLock<Vec<LaurentPoly3>> {
    static MEMO: OnceLock<RwLock<Vec<LaurentPoly3>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(Vec::new()))
}

/// `Ã₁, …, Ã_K`, memoised for the life of the process.
pub fn atilde_sequence(k: usize) -> AtildeSequence {
    assert!(k >= 1, "the sequence starts at index 1");
    {
        let memo = atilde_memo().read().unwrap();
        if memo.len() >= k {
            return AtildeSequence {
                entries: memo[..k].to_vec(),
            };
        }
    }
    let mut memo = atilde_memo().write().unwrap();
    let pencil = pencil_coeffs();
    while memo.len() < k {
        extend_atilde(&pencil, &mut memo);
    }
    AtildeSequence {
        entries: memo[..k].to_vec(),
    }
}

/// Indices `(first, size)` of the Hankel block: entries `Ã_{first+i+j}` for
/// `0 ≤ i, j < size`.
fn hankel_shape(n: u32) -> (usize, usize) {
    let n = n as usize;
    if n % 2 == 1 {
        (2, (n - 1) / 2)
    } else {
        (3, n / 2 - 1)
    }
}

/// Hankel matrix with entries `Ãₖ/k!`.
pub fn hankel_matrix(n: u32) -> Vec<Vec<LaurentPoly3>> {
    assert!(n >= 3, "polygons have at least three sides");
    let (first, size) = hankel_shape(n);
    let seq = atilde_sequence(first + 2 * (size - 1));
    let scaled: Vec<LaurentPoly3> = (1..=seq.entries.len())
        .map(|k| seq.get(k).scale(&rat(1, factorial(k))))
        .collect();
    (0..size)
        .map(|i| (0..size).map(|j| scaled[first + i + j - 1].clone()).collect())
        .collect()
}

/// The raw Hankel determinant `Q̃ⁿ`, before removing divisor factors.
pub fn hankel_raw(n: u32) -> LaurentPoly3 {
    det(&hankel_matrix(n))
}

/// Proper divisors `k` of `n` with `3 ≤ k < n`.
pub fn proper_divisors(n: u32) -> Vec<u32> {
    (3..n).filter(|k| n.is_multiple_of(*k)).collect()
}

/// Canonical locus polynomial `Qⁿ` together with its provenance.
#[derive(Clone, Debug, PartialEq)]
pub struct LocusPolynomial {
    pub n: u32,
    pub raw_hankel: LaurentPoly3,
    pub divisors_removed: Vec<u32>,
    pub canonical: LaurentPoly3,
}

fn build_locus(n: u32) -> Result<LocusPolynomial, CayleyError> {
    let raw = hankel_raw(n);
    let divisors = proper_divisors(n);
    let mut quotient = raw.clone();
    for &k in &divisors {
        quotient = quotient.div_exact(&locus(k)?.canonical)?;
    }
    Ok(LocusPolynomial {
        n,
        raw_hankel: raw,
        divisors_removed: divisors,
        canonical: quotient.canonicalize()?,
    })
}

/// `Qⁿ` for `3 ≤ n ≤ 12`, computed once per process.
pub fn locus(n: u32) -> Result<&'static LocusPolynomial, CayleyError> {
    static CACHE: [OnceLock<Result<LocusPolynomial, CayleyError>>; MAX_N as usize + 1] =
        [const { OnceLock::new() }; MAX_N as usize + 1];
    if !(3..=MAX_N).contains(&n) {
        return Err(CayleyError::UnsupportedN(n));
    }
    CACHE[n as usize]
        .get_or_init(|| build_locus(n))
        .as_ref()
        .map_err(Clone::clone)
}

/// `Qⁿ(p, ·, ·)` canonicalised as a polynomial in `x, y`.
pub fn locus_at_p(n: u32, p: &Rational) -> Result<LaurentPoly3, CayleyError> {
    if p.is_zero() {
        return Err(CayleyError::DegenerateParabola);
    }
    let q = locus(n)?.canonical.substitute_p(p)?;
    Ok(q.canonicalize()?)
}
