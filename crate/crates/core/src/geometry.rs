//! Floating-point Poncelet tracing in complex affine coordinates.
//!
//! Nothing here touches the exact machinery: a polygon is built edge by
//! edge from tangent lines of the parabola and chords of the circle, so it
//! can independently confirm or refute the algebraic closure conditions.
//! All dot products are the complex bilinear form `a·b = a₁b₁ + a₂b₂`
//! (no conjugation), which keeps circle membership polynomial.
//!
//! Inputs and outputs are `f64`, but the construction runs in double-double
//! arithmetic: orbits that pass close to the focus of a small parabola lose
//! around six digits in plain `f64`, too many for a `1e-9` closure test.

use num_complex::{Complex, Complex64};
use twofloat::TwoFloat;
use serde::{Deserialize, Serialize};

use crate::polycore::rational::from_f64;
use crate::polycore::{to_f64, Rational};

/// Closure tolerance on `|vₙ − v₀|`.
pub const CLOSURE_TOL: f64 = 1e-9;
/// Tolerance for a point to count as lying on the circle.
pub const ON_CIRCLE_TOL: f64 = 1e-10;
/// Tolerance for a point to count as lying on a tangent line.
pub const ON_LINE_TOL: f64 = 1e-9;
// below this |t_out − t_in| (relative) the two tangents from a vertex coincide
const DOUBLE_TANGENT_TOL: f64 = 1e-12;
// below this |d·d| (relative) a tangent direction is isotropic
const ISOTROPIC_TOL: f64 = 1e-12;
// relative step below which a chord is tangent to the circle
const TANGENT_CHORD_TOL: f64 = 1e-12;

pub type Point = [Complex64; 2];

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum GeometryError {
    #[error("radius must be positive")]
    BadRadius,
    #[error("p = 0 is a degenerate parabola")]
    DegenerateParabola,
    #[error("point is not on the circle (residual {0:e})")]
    NotOnCircle(f64),
    #[error("point is not on the tangent line (residual {0:e})")]
    NotOnLine(f64),
    #[error("degenerate step {step}: {reason}")]
    DegenerateStep { step: usize, reason: &'static str },
    #[error("only {0} of the sampled starts traced cleanly; at least 3 are required")]
    TooFewStarts(usize),
    #[error("a polygon needs at least 3 sides")]
    TooFewSides,
}

type Dd = Complex<TwoFloat>;
type DdPoint = [Dd; 2];

fn lift(z: Complex64) -> Dd {
    Complex::new(TwoFloat::from(z.re), TwoFloat::from(z.im))
}

fn lower(z: Dd) -> Complex64 {
    Complex64::new(f64::from(z.re), f64::from(z.im))
}

fn lift_point(v: Point) -> DdPoint {
    [lift(v[0]), lift(v[1])]
}

fn lower_point(v: DdPoint) -> Point {
    [lower(v[0]), lower(v[1])]
}

// `r` to double-double accuracy: the f64 nearest `r` plus the f64 nearest
// the remainder.
fn split_rational(r: &Rational) -> (f64, f64) {
    let hi = to_f64(r);
    let lo = from_f64(hi).map_or(0.0, |h| to_f64(&(r - h)));
    (hi, lo)
}

fn dd(v: f64) -> Dd {
    Complex::new(TwoFloat::from(v), TwoFloat::from(0.0))
}

// Long division with two correction terms; the crate's own `TwoFloat / TwoFloat`
// forms its residual in plain f64 and is only f64-accurate.
fn rdiv(a: TwoFloat, b: TwoFloat) -> TwoFloat {
    let q1 = a.hi() / b.hi();
    let r = a - b * q1;
    let q2 = r.hi() / b.hi();
    let r = r - b * q2;
    let q3 = r.hi() / b.hi();
    TwoFloat::new_add(q1, q2) + q3
}

fn div(a: Dd, b: Dd) -> Dd {
    let den = b.re * b.re + b.im * b.im;
    Complex::new(
        rdiv(a.re * b.re + a.im * b.im, den),
        rdiv(a.im * b.re - a.re * b.im, den),
    )
}

fn norm(z: Dd) -> f64 {
    lower(z).norm()
}

// Principal square root, computed without cancellation.
fn sqrt(z: Dd) -> Dd {
    let zero = TwoFloat::from(0.0);
    if z.re == zero && z.im == zero {
        return z;
    }
    let modulus = z.re.hypot(z.im);
    let half = TwoFloat::from(0.5);
    if z.re >= zero {
        let a = ((modulus + z.re) * half).sqrt();
        Complex::new(a, rdiv(z.im, a * 2.0))
    } else {
        let mut b = ((modulus - z.re) * half).sqrt();
        if z.im < zero {
            b = -b;
        }
        Complex::new(rdiv(z.im, b * 2.0), b)
    }
}

fn dot(a: &DdPoint, b: &DdPoint) -> Dd {
    a[0] * b[0] + a[1] * b[1]
}

fn sub(a: &DdPoint, b: &DdPoint) -> DdPoint {
    [a[0] - b[0], a[1] - b[1]]
}

fn add_scaled(a: &DdPoint, s: Dd, d: &DdPoint) -> DdPoint {
    [a[0] + s * d[0], a[1] + s * d[1]]
}

fn dd_distance(a: &DdPoint, b: &DdPoint) -> f64 {
    let d = sub(a, b);
    let (x, y) = (lower(d[0]), lower(d[1]));
    (x.norm_sqr() + y.norm_sqr()).sqrt()
}

/// Hermitian distance between two complex points.
pub fn distance(a: Point, b: Point) -> f64 {
    let d = [a[0] - b[0], a[1] - b[1]];
    (d[0].norm_sqr() + d[1].norm_sqr()).sqrt()
}

fn real_point(x: f64, y: f64) -> Point {
    [Complex64::new(x, 0.0), Complex64::new(y, 0.0)]
}

/// Circle of radius 1 with a (possibly complex) centre.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Circle {
    pub center: Point,
    // low-order parts of the real centre coordinates
    center_lo: [f64; 2],
}

impl Circle {
    pub fn unit(cx: f64, cy: f64) -> Self {
        Circle {
            center: real_point(cx, cy),
            center_lo: [0.0; 2],
        }
    }

    /// Centre given exactly; kept to double-double accuracy, since closure
    /// near the focus can be far more sensitive to the centre than `f64`
    /// rounding allows.
    pub fn unit_exact(cx: &Rational, cy: &Rational) -> Self {
        let (xh, xl) = split_rational(cx);
        let (yh, yl) = split_rational(cy);
        Circle {
            center: real_point(xh, yh),
            center_lo: [xl, yl],
        }
    }

    fn dd_center(&self) -> DdPoint {
        let c = lift_point(self.center);
        [c[0] + dd(self.center_lo[0]), c[1] + dd(self.center_lo[1])]
    }

    /// `(v − c)·(v − c) − 1`.
    pub fn residual(&self, v: Point) -> Complex64 {
        lower(self.dd_residual(&lift_point(v)))
    }

    fn dd_residual(&self, v: &DdPoint) -> Dd {
        let w = sub(v, &self.dd_center());
        dot(&w, &w) - dd(1.0)
    }
}

/// `y² = 2px + p²`: focus at the origin, directrix `x = −p`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Parabola {
    pub p: f64,
    p_lo: f64,
}

impl Parabola {
    pub fn new(p: f64) -> Result<Self, GeometryError> {
        if p == 0.0 || !p.is_finite() {
            return Err(GeometryError::DegenerateParabola);
        }
        Ok(Parabola { p, p_lo: 0.0 })
    }

    /// `p` given exactly, kept to double-double accuracy.
    pub fn exact(p: &Rational) -> Result<Self, GeometryError> {
        let (hi, lo) = split_rational(p);
        Ok(Parabola {
            p_lo: lo,
            ..Parabola::new(hi)?
        })
    }

    fn dd_p(&self) -> Dd {
        dd(self.p) + dd(self.p_lo)
    }

    pub fn residual(&self, v: Point) -> Complex64 {
        v[1] * v[1] - 2.0 * self.p * v[0] - self.p * self.p
    }

    /// Contact point `((t² − p²)/(2p), t)` of the tangent with parameter `t`.
    pub fn contact_point(&self, t: Complex64) -> Point {
        lower_point(self.dd_contact_point(lift(t)))
    }

    fn dd_contact_point(&self, t: Dd) -> DdPoint {
        let p = self.dd_p();
        [div(t * t - p * p, p * dd(2.0)), t]
    }

    /// `p·x − t·y + (t² + p²)/2`: zero on the tangent line with parameter `t`.
    pub fn line_residual(&self, t: Complex64, v: Point) -> Complex64 {
        lower(self.dd_line_residual(lift(t), &lift_point(v)))
    }

    fn dd_line_residual(&self, t: Dd, v: &DdPoint) -> Dd {
        let p = self.dd_p();
        p * v[0] - t * v[1] + (t * t + p * p) * dd(0.5)
    }

    /// Direction `(t, p)` of the tangent with parameter `t`.
    pub fn direction(&self, t: Complex64) -> Point {
        [t, Complex64::new(self.p, 0.0)]
    }

    fn dd_direction(&self, t: Dd) -> DdPoint {
        [t, self.dd_p()]
    }
}

/// Scales a circle of radius `radius` about `center` and the parabola `p`
/// by `1/radius`, giving the equivalent unit-circle configuration.
pub fn normalize(cx: f64, cy: f64, radius: f64, p: f64) -> Result<(Circle, Parabola), GeometryError> {
    if !radius.is_finite() || radius <= 0.0 {
        return Err(GeometryError::BadRadius);
    }
    Ok((Circle::unit(cx / radius, cy / radius), Parabola::new(p / radius)?))
}

/// Both tangent parameters through `point`: roots of
/// `t² − 2y₀t + (2px₀ + p²)`.
pub fn tangent_params(point: Point, par: &Parabola) -> [Complex64; 2] {
    let p = par.dd_p();
    let [x0, y0] = lift_point(point);
    let disc = sqrt(y0 * y0 - p * x0 * dd(2.0) - p * p);
    [lower(y0 + disc), lower(y0 - disc)]
}

fn isotropic(d: &DdPoint) -> bool {
    let dd_ = dot(d, d);
    let size = lower(d[0]).norm_sqr() + lower(d[1]).norm_sqr();
    norm(dd_) <= ISOTROPIC_TOL * size
}

fn scale(v: &DdPoint) -> f64 {
    1.0 + norm(v[0]) + norm(v[1])
}

fn dd_next_vertex(
    circle: &Circle,
    par: &Parabola,
    t: Dd,
    current: &DdPoint,
) -> Result<(DdPoint, bool), GeometryError> {
    let on_circle = norm(circle.dd_residual(current));
    if on_circle > ON_CIRCLE_TOL * scale(current) {
        return Err(GeometryError::NotOnCircle(on_circle));
    }
    let on_line = norm(par.dd_line_residual(t, current));
    if on_line > ON_LINE_TOL * scale(current).max(lower(t).norm_sqr()) {
        return Err(GeometryError::NotOnLine(on_line));
    }
    let d = par.dd_direction(t);
    if isotropic(&d) {
        return Err(GeometryError::DegenerateStep {
            step: 0,
            reason: "isotropic tangent line",
        });
    }
    let s = div(dd(-2.0) * dot(&d, &sub(current, &circle.dd_center())), dot(&d, &d));
    let step = norm(s) * (lower(d[0]).norm_sqr() + lower(d[1]).norm_sqr()).sqrt();
    if step <= TANGENT_CHORD_TOL * scale(current) {
        return Ok((*current, true));
    }
    Ok((add_scaled(current, s, &d), false))
}

/// Second intersection of the tangent line with parameter `t` and the
/// circle, given one intersection `current`. The flag is set when the line
/// touches the circle, in which case `current` is returned.
pub fn next_vertex(
    circle: &Circle,
    par: &Parabola,
    t: Complex64,
    current: Point,
) -> Result<(Point, bool), GeometryError> {
    dd_next_vertex(circle, par, lift(t), &lift_point(current)).map(|(v, flag)| (lower_point(v), flag))
}

fn dd_line_circle_intersections(
    circle: &Circle,
    par: &Parabola,
    t: Dd,
) -> Result<[DdPoint; 2], GeometryError> {
    let c0 = par.dd_contact_point(t);
    let d = par.dd_direction(t);
    if isotropic(&d) {
        return Err(GeometryError::DegenerateStep {
            step: 0,
            reason: "isotropic tangent line",
        });
    }
    let a = dot(&d, &d);
    let w = sub(&c0, &circle.dd_center());
    let b = dot(&d, &w);
    let c = dot(&w, &w) - dd(1.0);
    let root = sqrt(b * b - a * c);
    // stable pair of roots of a·s² + 2b·s + c
    let q = if (lower(b).conj() * lower(root)).re >= 0.0 { -(b + root) } else { -(b - root) };
    let (s1, s2) = if norm(q) == 0.0 { (dd(0.0), dd(0.0)) } else { (div(q, a), div(c, q)) };
    let mut pts = [add_scaled(&c0, s1, &d), add_scaled(&c0, s2, &d)];
    let key = |v: &DdPoint| (f64::from(v[0].re), f64::from(v[0].im));
    if key(&pts[1]) > key(&pts[0]) {
        pts.swap(0, 1);
    }
    Ok(pts)
}

/// Intersections of the tangent line with parameter `t` with the circle,
/// ordered by the start-vertex convention: larger real part of `x` first,
/// ties broken by the larger imaginary part.
pub fn line_circle_intersections(
    circle: &Circle,
    par: &Parabola,
    t: Complex64,
) -> Result<[Point; 2], GeometryError> {
    dd_line_circle_intersections(circle, par, lift(t)).map(|[a, b]| [lower_point(a), lower_point(b)])
}

/// A traced polygon.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceResult {
    /// `v₀, …, vₙ`; `vₙ` is compared with `v₀` for closure.
    pub vertices: Vec<Point>,
    /// Parameter of the edge `vₖ → vₖ₊₁`.
    pub tangency_params: Vec<Complex64>,
    pub closure_residual: f64,
    pub closed: bool,
    pub steps: usize,
    /// Smallest `k ≥ 1` with `vₖ = v₀` to tolerance.
    pub period: Option<usize>,
}

impl TraceResult {
    /// True when every vertex is real to `tol`.
    pub fn is_real(&self, tol: f64) -> bool {
        self.vertices
            .iter()
            .all(|v| v[0].im.abs() <= tol && v[1].im.abs() <= tol)
    }
}

fn dd_other_tangent(v: &DdPoint, t_in: Dd, par: &Parabola) -> Dd {
    let p = par.dd_p();
    let by_sum = v[1] * dd(2.0) - t_in;
    if norm(t_in) > norm(by_sum) {
        div(p * v[0] * dd(2.0) + p * p, t_in)
    } else {
        by_sum
    }
}

/// The second tangent through `v`, given that `v` lies on the tangent with
/// parameter `t_in`. Uses Vieta on `t² − 2y₀t + (2px₀ + p²)` rather than a
/// square root: the sum or the product form, whichever is better
/// conditioned, so nearly coincident tangents lose no accuracy.
pub fn other_tangent(v: Point, t_in: Complex64, par: &Parabola) -> Complex64 {
    lower(dd_other_tangent(&lift_point(v), lift(t_in), par))
}

/// Traces `n` edges starting on the tangent with parameter `start_t`.
pub fn poncelet_trace(
    circle: &Circle,
    par: &Parabola,
    start_t: Complex64,
    n: usize,
) -> Result<TraceResult, GeometryError> {
    if n < 3 {
        return Err(GeometryError::TooFewSides);
    }
    let v0 = dd_line_circle_intersections(circle, par, lift(start_t))?[0];
    let mut vertices = vec![v0];
    let mut params = Vec::with_capacity(n);
    let mut t_in = lift(start_t);
    let mut v = v0;
    for step in 0..n {
        let t = if step == 0 {
            t_in
        } else {
            let t = dd_other_tangent(&v, t_in, par);
            if norm(t - t_in) <= DOUBLE_TANGENT_TOL * (1.0 + norm(t)) {
                return Err(GeometryError::DegenerateStep {
                    step,
                    reason: "vertex lies on the parabola",
                });
            }
            t
        };
        let (next, _tangent) = dd_next_vertex(circle, par, t, &v).map_err(|e| match e {
            GeometryError::DegenerateStep { reason, .. } => GeometryError::DegenerateStep { step, reason },
            other => other,
        })?;
        params.push(lower(t));
        vertices.push(next);
        t_in = t;
        v = next;
    }
    let closure_residual = dd_distance(&vertices[n], &v0);
    let period = (1..=n).find(|&k| dd_distance(&vertices[k], &v0) < CLOSURE_TOL);
    Ok(TraceResult {
        closed: closure_residual < CLOSURE_TOL,
        closure_residual,
        steps: n,
        period,
        vertices: vertices.into_iter().map(lower_point).collect(),
        tangency_params: params,
    })
}

/// Deterministic spread of start parameters scaled by `|p|`: real ones and
/// complex ones with a small imaginary part, which keeps every start well
/// away from the isotropic directions `t = ±ip`.
pub fn default_starts(par: &Parabola, count: usize) -> Vec<Complex64> {
    let golden = 0.618_033_988_749_895_f64;
    (0..count)
        .map(|j| {
            let u = (j as f64 + 1.0) * golden;
            let re = (u.fract() - 0.5) * 3.0 + 0.17;
            let im = if j % 2 == 1 { 0.1 + 0.1 * (2.0 * u).fract() } else { 0.0 };
            Complex64::new(re, im) * par.p.abs()
        })
        .collect()
}

/// True when every cleanly traced start closes with minimal period exactly
/// `n`. Starts that hit a degenerate step are skipped; at least three must
/// succeed. A configuration closing after a proper divisor `k` of `n` (a
/// `k`-gon traversed `n/k` times) does not count as an `n`-gon.
pub fn closes_after(
    circle: &Circle,
    par: &Parabola,
    n: usize,
    num_starts: usize,
) -> Result<bool, GeometryError> {
    let starts = default_starts(par, num_starts.max(3) + 4);
    closes_after_with_starts(circle, par, n, &starts, num_starts.max(3))
}

/// As [`closes_after`] with explicit starts; stops after `needed` clean
/// traces.
pub fn closes_after_with_starts(
    circle: &Circle,
    par: &Parabola,
    n: usize,
    starts: &[Complex64],
    needed: usize,
) -> Result<bool, GeometryError> {
    let mut clean = 0;
    let mut all = true;
    for &t in starts {
        match poncelet_trace(circle, par, t, n) {
            Ok(tr) => {
                clean += 1;
                all &= tr.closed && tr.period == Some(n);
                if clean == needed {
                    break;
                }
            }
            Err(GeometryError::DegenerateStep { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    if clean < 3 {
        return Err(GeometryError::TooFewStarts(clean));
    }
    Ok(all)
}
