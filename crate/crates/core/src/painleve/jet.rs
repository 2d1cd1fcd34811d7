//! Second-order jets: a value with its first two derivatives in one
//! complex variable, propagated through arithmetic exactly by the Leibniz
//! and chain rules (no truncation error beyond floating point).

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet2 {
    pub value: Complex64,
    /// First derivative.
    pub d1: Complex64,
    /// Second derivative.
    pub d2: Complex64,
}

impl Jet2 {
    pub fn constant(value: Complex64) -> Self {
        Jet2 {
            value,
            d1: Complex64::new(0.0, 0.0),
            d2: Complex64::new(0.0, 0.0),
        }
    }

    /// The independent variable at `value`.
    pub fn variable(value: Complex64) -> Self {
        Jet2 {
            value,
            d1: Complex64::new(1.0, 0.0),
            d2: Complex64::new(0.0, 0.0),
        }
    }

    pub fn real(v: f64) -> Self {
        Self::constant(Complex64::new(v, 0.0))
    }

    /// Principal square root; the value must be nonzero.
    pub fn sqrt(self) -> Self {
        let s0 = self.value.sqrt();
        let s1 = self.d1 / (2.0 * s0);
        let s2 = (self.d2 - 2.0 * s1 * s1) / (2.0 * s0);
        Jet2 {
            value: s0,
            d1: s1,
            d2: s2,
        }
    }

    pub fn powi(self, n: u32) -> Self {
        (0..n).fold(Jet2::real(1.0), |acc, _| acc * self)
    }

    pub fn scale(self, k: f64) -> Self {
        Jet2 {
            value: self.value * k,
            d1: self.d1 * k,
            d2: self.d2 * k,
        }
    }
}

impl Add for Jet2 {
    type Output = Jet2;
    fn add(self, o: Jet2) -> Jet2 {
        Jet2 {
            value: self.value + o.value,
            d1: self.d1 + o.d1,
            d2: self.d2 + o.d2,
        }
    }
}

impl Sub for Jet2 {
    type Output = Jet2;
    fn sub(self, o: Jet2) -> Jet2 {
        Jet2 {
            value: self.value - o.value,
            d1: self.d1 - o.d1,
            d2: self.d2 - o.d2,
        }
    }
}

impl Neg for Jet2 {
    type Output = Jet2;
    fn neg(self) -> Jet2 {
        self.scale(-1.0)
    }
}

impl Mul for Jet2 {
    type Output = Jet2;
    fn mul(self, o: Jet2) -> Jet2 {
        Jet2 {
            value: self.value * o.value,
            d1: self.d1 * o.value + self.value * o.d1,
            d2: self.d2 * o.value + 2.0 * self.d1 * o.d1 + self.value * o.d2,
        }
    }
}

impl Div for Jet2 {
    type Output = Jet2;
    fn div(self, o: Jet2) -> Jet2 {
        let q0 = self.value / o.value;
        let q1 = (self.d1 - q0 * o.d1) / o.value;
        let q2 = (self.d2 - 2.0 * q1 * o.d1 - q0 * o.d2) / o.value;
        Jet2 {
            value: q0,
            d1: q1,
            d2: q2,
        }
    }
}

impl Add<f64> for Jet2 {
    type Output = Jet2;
    fn add(self, k: f64) -> Jet2 {
        self + Jet2::real(k)
    }
}

impl Sub<f64> for Jet2 {
    type Output = Jet2;
    fn sub(self, k: f64) -> Jet2 {
        self - Jet2::real(k)
    }
}

impl Mul<f64> for Jet2 {
    type Output = Jet2;
    fn mul(self, k: f64) -> Jet2 {
        self.scale(k)
    }
}

/// `dy/dx` and `d²y/dx²` for a curve `(x(p), y(p))` given as jets in `p`.
pub fn implicit_derivatives(x: Jet2, y: Jet2) -> (Complex64, Complex64) {
    let dy = y.d1 / x.d1;
    let d2y = (y.d2 * x.d1 - y.d1 * x.d2) / (x.d1 * x.d1 * x.d1);
    (dy, d2y)
}
