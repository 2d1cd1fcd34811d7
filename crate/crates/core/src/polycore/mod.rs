//! Exact arithmetic: rationals, polynomials in `(p, x, y)` that are Laurent in
//! `p`, univariate polynomials, determinants, discriminants and real root
//! isolation.

pub mod discriminant;
pub mod laurent;
pub mod matrix;
pub mod rational;
pub mod ring;
pub mod roots;
pub mod unipoly;

pub use discriminant::{
    discriminant, quartic_invariants, symbolic_disc_p, symbolic_quartic_invariants,
    QuarticInvariants,
};
pub use laurent::{LaurentPoly3, Monomial};
pub use matrix::det;
pub use rational::{format_rational, int, parse_rational, rat, to_f64, Rational};
pub use ring::{ExactDiv, Ring};
pub use roots::{refine_root, sturm_real_roots, RealRoot, RootList};
pub use unipoly::UniPolyR;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("division leaves a nonzero remainder")]
    NotDivisible,
    #[error("the zero polynomial has no canonical form or roots")]
    ZeroPolynomial,
    #[error("negative power of p where a polynomial was required")]
    NegativePExponent,
    #[error("unsupported degree {0}")]
    UnsupportedDegree(usize),
    #[error("closed-form and resultant discriminants disagree")]
    InconsistentDiscriminant,
}
