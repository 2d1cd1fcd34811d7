//! Real root isolation with Sturm sequences and exact bisection.

use num_traits::{One, Signed, Zero};

use super::rational::{rat, sign, to_f64, Rational};
use super::unipoly::UniPolyR;
use super::PolyError;

/// Isolating intervals are refined until narrower than this.
pub fn refinement_width() -> Rational {
    rat(1, 1_000_000_000_000)
}

/// One real root: an isolating interval, the midpoint as a double and the
/// multiplicity in the source polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct RealRoot {
    pub value: f64,
    pub multiplicity: u32,
    pub lo: Rational,
    pub hi: Rational,
}

/// Roots sorted ascending; intervals are pairwise disjoint.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RootList {
    pub roots: Vec<RealRoot>,
}

impl RootList {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn values(&self) -> Vec<f64> {
        self.roots.iter().map(|r| r.value).collect()
    }

    /// Multiplicities in ascending root order.
    pub fn multiplicities(&self) -> Vec<u32> {
        self.roots.iter().map(|r| r.multiplicity).collect()
    }

    pub fn total_multiplicity(&self) -> u32 {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }
}

/// The Sturm chain `f, f', -rem(f, f'), ...` of a polynomial.
pub fn sturm_sequence(f: &UniPolyR) -> Vec<UniPolyR> {
    let mut seq = vec![f.clone()];
    if f.degree().unwrap_or(0) == 0 {
        return seq;
    }
    seq.push(f.derivative());
    loop {
        let n = seq.len();
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(r.scale(&-Rational::one()));
    }
    seq
}

/// Number of sign changes of the chain at `t`, zeros skipped.
pub fn sign_variations(seq: &[UniPolyR], t: &Rational) -> usize {
    let mut last = 0;
    let mut changes = 0;
    for s in seq.iter().map(|g| sign(&g.eval(t))) {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Strict bound on the modulus of every root (Cauchy bound plus one).
pub fn root_bound(f: &UniPolyR) -> Rational {
    let lead = f.leading().expect("root bound of zero").abs();
    let n = f.degree().unwrap();
    let max_ratio = f.coeffs()[..n]
        .iter()
        .map(|c| c.abs() / &lead)
        .fold(Rational::zero(), |a, b| if b > a { b } else { a });
    max_ratio + Rational::from_integer(2.into())
}

/// All real roots of `f` with multiplicities.
///
/// With `exclude_zero` the root `p = 0` is dropped (the parabola degenerates
/// there).
pub fn sturm_real_roots(f: &UniPolyR, exclude_zero: bool) -> Result<RootList, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let zero_mult = f.zero_root_multiplicity();
    let g = f.strip_zero_roots();
    let factors = if g.degree() == Some(0) {
        Vec::new()
    } else {
        g.square_free_decomposition()
    };
    let mut roots = Vec::new();
    if !factors.is_empty() {
        let squarefree = factors.iter().fold(UniPolyR::from_i64(&[1]), |acc, h| acc.mul(h));
        for (lo, hi) in isolate_square_free(&squarefree) {
            let multiplicity = factors
                .iter()
                .position(|h| {
                    h.degree().unwrap_or(0) > 0 && sign(&h.eval(&lo)) * sign(&h.eval(&hi)) < 0
                })
                .map(|i| i as u32 + 1)
                .expect("every isolated root belongs to one square-free factor");
            roots.push(RealRoot {
                value: polish(&squarefree, &lo, &hi),
                multiplicity,
                lo,
                hi,
            });
        }
    }
    if zero_mult > 0 && !exclude_zero {
        let w = refinement_width() / Rational::from_integer(4.into());
        roots.push(RealRoot {
            value: 0.0,
            multiplicity: zero_mult as u32,
            lo: -w.clone(),
            hi: w,
        });
    }
    roots.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(RootList { roots })
}

/// Isolating intervals `(lo, hi)` of a square-free polynomial without a
/// root at zero, each narrower than [`refinement_width`], with `f(lo)` and
/// `f(hi)` of opposite signs.
pub fn isolate_square_free(f: &UniPolyR) -> Vec<(Rational, Rational)> {
    if f.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let seq = sturm_sequence(f);
    let bound = root_bound(f);
    let mut pending = vec![(-bound.clone(), bound)];
    let mut out = Vec::new();
    while let Some((a, b)) = pending.pop() {
        let count = sign_variations(&seq, &a) - sign_variations(&seq, &b);
        match count {
            0 => {}
            1 => out.push(refine(f, a, b)),
            _ => {
                let m = split_point(f, &a, &b);
                pending.push((a, m.clone()));
                pending.push((m, b));
            }
        }
    }
    out.sort();
    out
}

// A point strictly inside (a, b) that is not a root of f.
fn split_point(f: &UniPolyR, a: &Rational, b: &Rational) -> Rational {
    let width = b - a;
    let mut k = 1i64;
    loop {
        // 1/2, then 1/2 ± small dyadic offsets
        for num in [2 * k - 1, 2 * k + 1] {
            let m = a + &width * Rational::new(num.into(), (4 * k).into());
            if m > *a && m < *b && !f.eval(&m).is_zero() {
                return m;
            }
        }
        k += 1;
    }
}

// Shrinks an interval known to hold exactly one simple root, with nonzero
// signs at both ends.
fn refine(f: &UniPolyR, mut a: Rational, mut b: Rational) -> (Rational, Rational) {
    let tol = refinement_width();
    let two = Rational::from_integer(2.into());
    let mut sa = sign(&f.eval(&a));
    debug_assert!(sa != 0 && sa * sign(&f.eval(&b)) < 0);
    while &b - &a >= tol {
        let m = (&a + &b) / &two;
        let sm = sign(&f.eval(&m));
        if sm == 0 {
            // exact rational root: centre a tiny interval on it
            let mut delta = (&b - &a) / Rational::from_integer(4.into());
            while &delta * &two >= tol {
                delta /= &two;
            }
            return (&m - &delta, &m + &delta);
        }
        if sm == sa {
            a = m;
            sa = sm;
        } else {
            b = m;
        }
    }
    (a, b)
}

/// Midpoint of `root`'s interval after shrinking it below `width`, for
/// callers that need more than `f64` accuracy. `root` must come from
/// [`sturm_real_roots`] on the same `f`.
pub fn refine_root(f: &UniPolyR, root: &RealRoot, width: &Rational) -> Rational {
    let two = Rational::from_integer(2.into());
    // an isolating interval around zero holds only the root zero
    if root.lo.is_negative() && root.hi.is_positive() && f.eval(&Rational::zero()).is_zero() {
        return Rational::zero();
    }
    let g = f
        .strip_zero_roots()
        .square_free_decomposition()
        .iter()
        .fold(UniPolyR::from_i64(&[1]), |acc, h| acc.mul(h));
    let (mut a, mut b) = (root.lo.clone(), root.hi.clone());
    let sa = sign(&g.eval(&a));
    while &b - &a >= *width {
        let m = (&a + &b) / &two;
        let sm = sign(&g.eval(&m));
        if sm == 0 || sa == 0 {
            return m;
        }
        if sm == sa {
            a = m;
        } else {
            b = m;
        }
    }
    (a + b) / two
}

// Bisects a copy of the isolating interval until both ends round to the
// same f64, so `value` is accurate to the last bit.
fn polish(f: &UniPolyR, lo: &Rational, hi: &Rational) -> f64 {
    let two = Rational::from_integer(2.into());
    let (mut a, mut b) = (lo.clone(), hi.clone());
    let sa = sign(&f.eval(&a));
    for _ in 0..96 {
        if to_f64(&a) == to_f64(&b) {
            break;
        }
        let m = (&a + &b) / &two;
        let sm = sign(&f.eval(&m));
        if sm == 0 || sa == 0 {
            return to_f64(&m);
        }
        if sm == sa {
            a = m;
        } else {
            b = m;
        }
    }
    to_f64(&((a + b) / two))
}

#[cfg(test)]
mod tests {
    use super::super::rational::{int, rat};
    use super::*;

    #[test]
    fn simple_quadratic() {
        let f = UniPolyR::from_i64(&[-2, 0, 1]);
        let r = sturm_real_roots(&f, false).unwrap();
        assert_eq!(r.len(), 2);
        assert!((r.roots[0].value + 2f64.sqrt()).abs() < 1e-12);
        assert!((r.roots[1].value - 2f64.sqrt()).abs() < 1e-12);
        assert_eq!(r.multiplicities(), vec![1, 1]);
    }

    #[test]
    fn double_rational_root() {
        let f = UniPolyR::new(vec![rat(1, 8), int(-1), int(2)]);
        let r = sturm_real_roots(&f, true).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r.roots[0].multiplicity, 2);
        assert!((r.roots[0].value - 0.25).abs() < 1e-12);
        assert!(r.roots[0].lo < rat(1, 4) && rat(1, 4) < r.roots[0].hi);
    }

    #[test]
    fn linear_root() {
        let r = sturm_real_roots(&UniPolyR::from_i64(&[6, 4]), true).unwrap();
        assert_eq!(r.len(), 1);
        assert!((r.roots[0].value + 1.5).abs() < 1e-12);
    }

    #[test]
    fn zero_root_handling() {
        // p^2 (p - 1)
        let f = UniPolyR::from_i64(&[0, 0, -1, 1]);
        let nonzero = sturm_real_roots(&f, true).unwrap();
        assert_eq!(nonzero.len(), 1);
        assert!((nonzero.roots[0].value - 1.0).abs() < 1e-12);
        let all = sturm_real_roots(&f, false).unwrap();
        assert_eq!(all.multiplicities(), vec![2, 1]);
        assert!(matches!(
            sturm_real_roots(&UniPolyR::zero(), false),
            Err(PolyError::ZeroPolynomial)
        ));
        assert!(sturm_real_roots(&UniPolyR::from_i64(&[3]), false).unwrap().is_empty());
    }

    #[test]
    fn clustered_roots_are_separated() {
        // (p - 1)(p - 1 - 1e-9)(p + 3)
        let eps = rat(1, 1_000_000_000);
        let a = UniPolyR::new(vec![int(-1), int(1)]);
        let b = UniPolyR::new(vec![-(int(1) + eps), int(1)]);
        let c = UniPolyR::from_i64(&[3, 1]);
        let r = sturm_real_roots(&a.mul(&b).mul(&c), false).unwrap();
        assert_eq!(r.len(), 3);
        for w in r.roots.windows(2) {
            assert!(w[0].hi <= w[1].lo);
        }
    }
}
