use std::ops::{Neg, Sub};

use num_traits::{One, Zero};

use super::rational::Rational;

/// Commutative ring with exact arithmetic. Determinants and the quartic
/// invariants are written once against this trait and used both for
/// rational numbers and for symbolic polynomials.
pub trait Ring: Clone + PartialEq + Zero + One + Sub<Output = Self> + Neg<Output = Self> {
    fn from_i64(n: i64) -> Self;
}

/// Exact division, needed by fraction-free elimination.
pub trait ExactDiv: Ring {
    /// `Some(q)` with `self == q * divisor`, `None` when no such `q` exists.
    fn div_exact(&self, divisor: &Self) -> Option<Self>;
}

impl Ring for Rational {
    fn from_i64(n: i64) -> Self {
        super::rational::int(n)
    }
}

impl ExactDiv for Rational {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            None
        } else {
            Some(self / divisor)
        }
    }
}
