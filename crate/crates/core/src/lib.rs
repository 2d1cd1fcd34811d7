//! Poncelet pairs formed by the unit circle and the confocal parabolas
//! `y² = 2px + p²`.
//!
//! [`cayley`] produces the exact locus polynomials `Qⁿ(p, x, y)`,
//! [`classify`] turns them into decisions for a given circle centre,
//! [`geometry`] is an independent floating-point closure oracle, and
//! [`painleve`] builds the algebraic Painlevé VI solutions coming from the
//! isoperiodic families.

pub mod polycore;
pub mod cayley;
pub mod classify;
pub mod geometry;
pub mod painleve;
