//! Closed-form parabola parameters for `n = 4, 5, 6`.

use num_complex::Complex64;
use num_traits::Zero;

use crate::polycore::rational::sign;
use crate::polycore::{int, to_f64, Rational};

use super::{Center, ClassifyError};

/// The unique nonzero `p` with a 4-Poncelet pair: `−x(r−1)/r`.
pub fn unique_p_for_4(e: &Center) -> Result<Rational, ClassifyError> {
    if e.is_focus() {
        return Err(ClassifyError::AtFocus);
    }
    if e.x.is_zero() {
        return Err(ClassifyError::OnLatusRectumLine);
    }
    if e.on_unit_circle() {
        return Err(ClassifyError::OnUnitCircle);
    }
    let r = e.r2();
    Ok(-(&e.x) * (&r - int(1)) / r)
}

/// Roots `p₊, p₋` of a quadratic in `p` given as
/// `(−b ± √radicand)·scale`; real exactly when `radicand ≥ 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClosedFormRoots {
    pub plus: Complex64,
    pub minus: Complex64,
    /// Sign of the radicand, decided exactly for rational centres.
    pub radicand_sign: i32,
}

impl ClosedFormRoots {
    pub fn is_real(&self) -> bool {
        self.radicand_sign >= 0
    }

    pub fn is_double(&self) -> bool {
        self.radicand_sign == 0
    }

    fn build(b: f64, radicand: f64, radicand_sign: i32, scale: f64) -> Self {
        let root = if radicand_sign >= 0 {
            Complex64::new(radicand.max(0.0).sqrt(), 0.0)
        } else {
            Complex64::new(0.0, (-radicand).sqrt())
        };
        let b = Complex64::new(-b, 0.0);
        ClosedFormRoots {
            plus: (b + root) * scale,
            minus: (b - root) * scale,
            radicand_sign,
        }
    }
}

fn require_off_sigma(e: &Center) -> Result<(), ClassifyError> {
    if e.in_sigma() {
        Err(ClassifyError::ExcludedCenter)
    } else {
        Ok(())
    }
}

/// `p± = (−x ± √(r² − y²))(r − 1)/(2r)`.
pub fn roots_5_closed_form(e: &Center) -> Result<ClosedFormRoots, ClassifyError> {
    require_off_sigma(e)?;
    let r = e.r2();
    let radicand = &r * &r - &e.y * &e.y;
    let s = sign(&radicand);
    let scale = (&r - int(1)) / (int(2) * &r);
    Ok(ClosedFormRoots::build(to_f64(&e.x), to_f64(&radicand), s, to_f64(&scale)))
}

/// `p± = (−x(2r+1) ± √(r³ − y²))(r − 1)/(2r(r+1))`.
pub fn roots_6_closed_form(e: &Center) -> Result<ClosedFormRoots, ClassifyError> {
    require_off_sigma(e)?;
    let r = e.r2();
    let radicand = &r * &r * &r - &e.y * &e.y;
    let s = sign(&radicand);
    let b = &e.x * (int(2) * &r + int(1));
    let scale = (&r - int(1)) / (int(2) * &r * (&r + int(1)));
    Ok(ClosedFormRoots::build(to_f64(&b), to_f64(&radicand), s, to_f64(&scale)))
}

/// Floating-point variants for centres that are not rational (points on
/// `Γ⁵`, `Γ⁶` usually are not). The radicand sign is taken with a relative
/// tolerance of `1e-12`.
pub fn roots_5_closed_form_f64(x: f64, y: f64) -> ClosedFormRoots {
    let r = x * x + y * y;
    let radicand = r * r - y * y;
    let s = float_sign(radicand, r * r + y * y);
    ClosedFormRoots::build(x, radicand, s, (r - 1.0) / (2.0 * r))
}

pub fn roots_6_closed_form_f64(x: f64, y: f64) -> ClosedFormRoots {
    let r = x * x + y * y;
    let radicand = r * r * r - y * y;
    let s = float_sign(radicand, r * r * r + y * y);
    ClosedFormRoots::build(x * (2.0 * r + 1.0), radicand, s, (r - 1.0) / (2.0 * r * (r + 1.0)))
}

fn float_sign(v: f64, scale: f64) -> i32 {
    if v.abs() <= 1e-12 * scale.max(1.0) {
        0
    } else if v > 0.0 {
        1
    } else {
        -1
    }
}

/// Tangential pentagon parameter on `Γ⁵` for `0 < y < 1`:
/// `√y (1 − y)^{3/2} / (2y)`.
pub fn gamma5_double_root(y: f64) -> f64 {
    y.sqrt() * (1.0 - y).powf(1.5) / (2.0 * y)
}

/// Tangential hexagon parameter on `Γ⁶` for `0 < y < 1`.
pub fn gamma6_double_root(y: f64) -> f64 {
    let y13 = y.cbrt();
    let y23 = y13 * y13;
    -(1.0 - y23 * y23).sqrt() * (2.0 * y23 + 1.0) * (y23 - 1.0) / (2.0 * y13 * (y23 + 1.0))
}
