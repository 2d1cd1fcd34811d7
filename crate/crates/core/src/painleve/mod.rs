//! Algebraic Painlevé VI solutions carried by the two isoperiodic families:
//! circles through the focus (`N3`, centre `(1,0)`) and the circle centred
//! at the focus (`N4`). Each family gives a Picard solution `y₀(x)` with
//! parameters `(0,0,0,1/2)`; the Okamoto map sends it to a solution `y(x)`
//! with parameters `(1/8,−1/8,1/8,3/8)`.
//!
//! Points are parametrised by the parabola parameter `p`. Derivatives in
//! `x` come from second-order jets in `p`, so residuals of the equation are
//! limited only by floating-point rounding.

mod jet;

pub use jet::{implicit_derivatives, Jet2};

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::classify::Center;
use crate::polycore::{int, rat, to_f64, Rational};

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum PainleveError {
    #[error("p = 0 is a degenerate parabola")]
    DegenerateParabola,
    #[error("p = {0} is a branch point of the solution")]
    BranchPoint(Complex64),
    #[error("p = {0} is a pole of the solution")]
    Pole(Complex64),
    #[error("Okamoto denominator vanishes")]
    SingularDenominator,
    #[error("equation is singular at this input")]
    SingularInput,
    #[error("derivative check failed: expected {expected}, got {got}")]
    InconsistentDerivative { expected: Complex64, got: Complex64 },
    #[error("algebraic relation check failed (residual {0:e})")]
    InconsistentRelation(f64),
}

/// Coefficients `α, β, γ, δ` of the sixth Painlevé equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PVIParams {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub delta: Rational,
}

impl PVIParams {
    /// `(0, 0, 0, 1/2)`.
    pub fn picard() -> Self {
        PVIParams {
            alpha: int(0),
            beta: int(0),
            gamma: int(0),
            delta: rat(1, 2),
        }
    }

    /// `(1/8, −1/8, 1/8, 3/8)`.
    pub fn okamoto_image() -> Self {
        PVIParams {
            alpha: rat(1, 8),
            beta: rat(-1, 8),
            gamma: rat(1, 8),
            delta: rat(3, 8),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    N3,
    N4,
}

impl Family {
    pub fn n(self) -> u32 {
        match self {
            Family::N3 => 3,
            Family::N4 => 4,
        }
    }

    /// The isoperiodic centre of the family.
    pub fn center(self) -> Center {
        match self {
            Family::N3 => Center::from_i64(1, 0),
            Family::N4 => Center::from_i64(0, 0),
        }
    }

    /// The known `dy₀/dx` along the family.
    pub fn expected_dy0_dx(self, p: Complex64) -> Complex64 {
        match self {
            Family::N3 => -p / 3.0,
            Family::N4 => p * p / 2.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PVISolutionPoint {
    pub family: Family,
    pub p: Complex64,
    pub x: Complex64,
    pub y0: Complex64,
    pub y: Complex64,
    pub dy0_dx: Complex64,
    pub dy_dx: Complex64,
    pub d2y_dx2: Complex64,
    /// Equation defect of `y₀` at [`PVIParams::picard`].
    pub residual_y0: f64,
    /// Equation defect of `y` at [`PVIParams::okamoto_image`].
    pub residual_y: f64,
    /// Hitchin quartic (`N3`) or `y² − 2xy + x` (`N4`) at the point.
    pub relation_residual: f64,
    /// `|okamoto(y₀, expected dy₀/dx, x) − y|`.
    pub okamoto_defect: f64,
}

impl PVISolutionPoint {
    pub fn max_residual(&self) -> f64 {
        self.residual_y0.max(self.residual_y)
    }
}

fn near(p: Complex64, v: f64) -> bool {
    (p - v).norm() <= 1e-12 * (1.0 + v.abs())
}

/// Zeros `λ` of `det(λ𝒟 + 𝒫) = −λ³ + Θ₁λ² + Θ₂λ − p²`.
///
/// For the centres `(1,0)` and `(0,0)` the closed forms are returned in the
/// order `[−1, λ₊, λ₋]`; otherwise the cubic is solved numerically.
pub fn cubic_spectrum(e: &Center, p: Complex64) -> Result<[Complex64; 3], PainleveError> {
    if p.norm() == 0.0 {
        return Err(PainleveError::DegenerateParabola);
    }
    let one = Complex64::new(1.0, 0.0);
    let b = if e.y.is_zero() && e.x.is_one() {
        p * (p + 2.0)
    } else if e.is_focus() {
        p * p
    } else {
        let (x, y) = e.to_f64();
        let theta1 = -p * p - 2.0 * p * x + y * y - 1.0;
        let theta2 = -2.0 * p * p - 2.0 * p * x;
        return Ok(cubic_roots(-one, theta1, theta2, -p * p));
    };
    let root = (b * b - 4.0 * p * p).sqrt();
    Ok([-one, (-b + root) / 2.0, (-b - root) / 2.0])
}

/// Roots of `a·t³ + b·t² + c·t + d` by Cardano, each polished by Newton.
pub fn cubic_roots(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> [Complex64; 3] {
    let (bb, cc, dd) = (b / a, c / a, d / a);
    let shift = bb / 3.0;
    let pp = cc - bb * bb / 3.0;
    let qq = 2.0 * bb * bb * bb / 27.0 - bb * cc / 3.0 + dd;
    let disc = (qq * qq / 4.0 + pp * pp * pp / 27.0).sqrt();
    let w3a = -qq / 2.0 + disc;
    let w3b = -qq / 2.0 - disc;
    let w3 = if w3a.norm() >= w3b.norm() { w3a } else { w3b };
    let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
    let w = w3.powf(1.0 / 3.0);
    let mut out = [Complex64::zero(); 3];
    let mut wk = w;
    for slot in &mut out {
        let u = if wk.norm() == 0.0 { wk } else { wk - pp / (3.0 * wk) };
        *slot = u - shift;
        wk *= omega;
    }
    for t in &mut out {
        for _ in 0..2 {
            let f = ((a * *t + b) * *t + c) * *t + d;
            let df = (3.0 * a * *t + 2.0 * b) * *t + c;
            if df.norm() > 0.0 {
                *t -= f / df;
            }
        }
    }
    out
}

fn params_f64(params: &PVIParams) -> [f64; 4] {
    [
        to_f64(&params.alpha),
        to_f64(&params.beta),
        to_f64(&params.gamma),
        to_f64(&params.delta),
    ]
}

/// `|y'' − RHS|` for the sixth Painlevé equation.
pub fn pvi_residual(
    x: Complex64,
    y: Complex64,
    dy_dx: Complex64,
    d2y_dx2: Complex64,
    params: &PVIParams,
) -> Result<f64, PainleveError> {
    let tiny = |z: Complex64| z.norm() <= 1e-300;
    if tiny(x) || tiny(x - 1.0) || tiny(y) || tiny(y - 1.0) || tiny(y - x) {
        return Err(PainleveError::SingularInput);
    }
    let [a, b, g, d] = params_f64(params);
    let one = Complex64::new(1.0, 0.0);
    let rhs = 0.5 * (one / y + one / (y - 1.0) + one / (y - x)) * dy_dx * dy_dx
        - (one / x + one / (x - 1.0) + one / (y - x)) * dy_dx
        + y * (y - 1.0) * (y - x) / (x * x * (x - 1.0) * (x - 1.0))
            * (a + b * x / (y * y)
                + g * (x - 1.0) / ((y - 1.0) * (y - 1.0))
                + d * x * (x - 1.0) / ((y - x) * (y - x)));
    Ok((d2y_dx2 - rhs).norm())
}

/// Okamoto map: `y₀ + y₀(y₀−1)(y₀−x) / (x(x−1)y₀′ − y₀(y₀−1))`.
pub fn okamoto(y0: Complex64, dy0_dx: Complex64, x: Complex64) -> Result<Complex64, PainleveError> {
    let den = x * (x - 1.0) * dy0_dx - y0 * (y0 - 1.0);
    let num = y0 * (y0 - 1.0) * (y0 - x);
    if den.norm() <= 1e-14 * (1.0 + num.norm()) {
        if num.norm() == 0.0 {
            return Ok(y0);
        }
        return Err(PainleveError::SingularDenominator);
    }
    Ok(y0 + num / den)
}

/// `x y³(y+2) + x³(2y−1) − x²y(y³−2y²+6y−2) − y⁴`.
pub fn hitchin_relation(x: Complex64, y: Complex64) -> Complex64 {
    x * y.powi(3) * (y + 2.0) + x.powi(3) * (2.0 * y - 1.0)
        - x * x * y * (y.powi(3) - 2.0 * y * y + 6.0 * y - 2.0)
        - y.powi(4)
}

/// `y² − 2xy + x`.
pub fn n4_relation(x: Complex64, y: Complex64) -> Complex64 {
    y * y - 2.0 * x * y + x
}

// x, y₀, y as jets in p.
fn n3_jets(p: Complex64) -> (Jet2, Jet2, Jet2) {
    let t = Jet2::variable(p);
    let s = (t.powi(3) * (t + 4.0)).sqrt();
    let p2 = t * t;
    let x = (p2 + t * 2.0 - 2.0 + s) / (s * 2.0);
    let y0 = (p2 + t * 2.0 + s) / (s * 2.0);
    let y = (p2 + t * 2.0 + s) * (-p2 - t * 4.0 + s * 3.0) / (t * (t + 1.0) * s * 4.0);
    (x, y0, y)
}

fn n4_jets(p: Complex64) -> (Jet2, Jet2, Jet2) {
    let t = Jet2::variable(p);
    let p2 = t * t;
    let s = (p2 * (p2 - 4.0)).sqrt();
    let x = (p2 - 2.0 + s) / (s * 2.0);
    let y0 = (p2 / s + 1.0) * 0.5;
    let y = (p2 + s) / (p2 * 2.0);
    (x, y0, y)
}

const DERIVATIVE_TOL: f64 = 1e-9;
const RELATION_TOL: f64 = 1e-8;

fn build_point(family: Family, p: Complex64, (x, y0, y): (Jet2, Jet2, Jet2)) -> Result<PVISolutionPoint, PainleveError> {
    let (dy0_dx, d2y0_dx2) = implicit_derivatives(x, y0);
    let (dy_dx, d2y_dx2) = implicit_derivatives(x, y);
    let expected = family.expected_dy0_dx(p);
    if (dy0_dx - expected).norm() > DERIVATIVE_TOL * (1.0 + expected.norm()) {
        return Err(PainleveError::InconsistentDerivative { expected, got: dy0_dx });
    }
    let (x, y0, y) = (x.value, y0.value, y.value);
    let relation = match family {
        Family::N3 => hitchin_relation(x, y).norm(),
        Family::N4 => {
            let via_y0 = y0 / (2.0 * y0 - 1.0);
            if (via_y0 - y).norm() > DERIVATIVE_TOL * (1.0 + y.norm()) {
                return Err(PainleveError::InconsistentRelation((via_y0 - y).norm()));
            }
            n4_relation(x, y).norm().max(n4_relation(x, y0).norm())
        }
    };
    let scale = 1.0 + x.norm().powi(4) + y.norm().powi(4);
    if relation > RELATION_TOL * scale {
        return Err(PainleveError::InconsistentRelation(relation));
    }
    let okamoto_defect = (okamoto(y0, expected, x)? - y).norm();
    Ok(PVISolutionPoint {
        family,
        p,
        x,
        y0,
        y,
        dy0_dx,
        dy_dx,
        d2y_dx2,
        residual_y0: pvi_residual(x, y0, dy0_dx, d2y0_dx2, &PVIParams::picard())?,
        residual_y: pvi_residual(x, y, dy_dx, d2y_dx2, &PVIParams::okamoto_image())?,
        relation_residual: relation,
        okamoto_defect,
    })
}

/// The `n = 3` family at parameter `p` (principal square root of
/// `p³(p+4)`, the same branch in every formula).
pub fn solution_n3(p: Complex64) -> Result<PVISolutionPoint, PainleveError> {
    if near(p, 0.0) || near(p, -4.0) {
        return Err(PainleveError::BranchPoint(p));
    }
    if near(p, -1.0) {
        return Err(PainleveError::Pole(p));
    }
    build_point(Family::N3, p, n3_jets(p))
}

/// The `n = 4` family at parameter `p` (principal square root of
/// `p²(p²−4)`).
pub fn solution_n4(p: Complex64) -> Result<PVISolutionPoint, PainleveError> {
    if near(p, 0.0) || near(p, 2.0) || near(p, -2.0) {
        return Err(PainleveError::BranchPoint(p));
    }
    build_point(Family::N4, p, n4_jets(p))
}

pub fn solution(family: Family, p: Complex64) -> Result<PVISolutionPoint, PainleveError> {
    match family {
        Family::N3 => solution_n3(p),
        Family::N4 => solution_n4(p),
    }
}

/// Points of one family with the failures kept alongside.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilySample {
    pub points: Vec<PVISolutionPoint>,
    pub errors: Vec<(Complex64, PainleveError)>,
    /// Largest equation residual over `points`.
    pub max_residual: f64,
}

pub fn sample_family(family: Family, p_values: &[Complex64]) -> FamilySample {
    let mut points = Vec::new();
    let mut errors = Vec::new();
    for &p in p_values {
        match solution(family, p) {
            Ok(pt) => points.push(pt),
            Err(e) => errors.push((p, e)),
        }
    }
    let max_residual = points.iter().map(|pt| pt.max_residual()).fold(0.0, f64::max);
    FamilySample {
        points,
        errors,
        max_residual,
    }
}

// a + b·s with s² = S: both square-root branches at once.
#[derive(Clone, Debug, PartialEq)]
struct QuadExt {
    a: Rational,
    b: Rational,
}

impl QuadExt {
    fn rational(a: Rational) -> Self {
        QuadExt { a, b: int(0) }
    }

    fn add(&self, o: &Self) -> Self {
        QuadExt {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
        }
    }

    fn sub(&self, o: &Self) -> Self {
        QuadExt {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
        }
    }

    fn mul(&self, o: &Self, s2: &Rational) -> Self {
        QuadExt {
            a: &self.a * &o.a + &self.b * &o.b * s2,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

/// Exact check of the family's algebraic relation at a rational `p`,
/// computed in `ℚ[s]/(s² − S)` so that both branches of the square root are
/// covered at once: the Hitchin quartic for `N3`, and both `y² − 2xy + x`
/// and `y₀² − 2xy₀ + x` for `N4`.
pub fn algebraic_certificate(family: Family, p: &Rational) -> Result<bool, PainleveError> {
    let one = int(1);
    let p2 = p * p;
    let (s2, x, y0, y) = match family {
        Family::N3 => {
            if p.is_zero() || *p == int(-4) {
                return Err(PainleveError::BranchPoint(Complex64::new(to_f64(p), 0.0)));
            }
            if *p == int(-1) {
                return Err(PainleveError::Pole(Complex64::new(-1.0, 0.0)));
            }
            let s2 = &p2 * p * (p + int(4));
            // 1/s = s/S
            let over = |num: Rational| QuadExt {
                a: rat(1, 2),
                b: num / (int(2) * &s2),
            };
            let x = over(&p2 + int(2) * p - int(2));
            let y0 = over(&p2 + int(2) * p);
            // (p²+2p+s)(−p²−4p+3s)·s / (4p(p+1)S)
            let f = QuadExt {
                a: &p2 + int(2) * p,
                b: one.clone(),
            };
            let g = QuadExt {
                a: -&p2 - int(4) * p,
                b: int(3),
            };
            let fg = f.mul(&g, &s2);
            let k = int(4) * p * (p + int(1)) * &s2;
            let y = QuadExt {
                a: &fg.b * &s2 / &k,
                b: &fg.a / &k,
            };
            (s2, x, y0, y)
        }
        Family::N4 => {
            if p.is_zero() || *p == int(2) || *p == int(-2) {
                return Err(PainleveError::BranchPoint(Complex64::new(to_f64(p), 0.0)));
            }
            let s2 = &p2 * (&p2 - int(4));
            let x = QuadExt {
                a: rat(1, 2),
                b: (&p2 - int(2)) / (int(2) * &s2),
            };
            let y0 = QuadExt {
                a: rat(1, 2),
                b: &p2 / (int(2) * &s2),
            };
            let y = QuadExt {
                a: rat(1, 2),
                b: one.clone() / (int(2) * &p2),
            };
            (s2, x, y0, y)
        }
    };
    let rel = |u: &QuadExt| {
        let two_x = x.add(&x);
        u.mul(u, &s2).sub(&two_x.mul(u, &s2)).add(&x)
    };
    Ok(match family {
        Family::N3 => {
            let c = |v: i64| QuadExt::rational(int(v));
            let m = |a: &QuadExt, b: &QuadExt| a.mul(b, &s2);
            let y2 = m(&y, &y);
            let y3 = m(&y2, &y);
            let y4 = m(&y3, &y);
            let x2 = m(&x, &x);
            let x3 = m(&x2, &x);
            let t1 = m(&m(&x, &y3), &y.add(&c(2)));
            let t2 = m(&x3, &m(&c(2), &y).sub(&c(1)));
            let inner = y3.sub(&m(&c(2), &y2)).add(&m(&c(6), &y)).sub(&c(2));
            let t3 = m(&m(&x2, &y), &inner);
            t1.add(&t2).sub(&t3).sub(&y4).is_zero()
        }
        Family::N4 => rel(&y).is_zero() && rel(&y0).is_zero(),
    })
}
