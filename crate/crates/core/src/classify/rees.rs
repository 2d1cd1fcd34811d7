//! Root structure of a real quartic from the signs of its discriminant and
//! the auxiliary invariants `P, D, R, O`.

use serde::{Deserialize, Serialize};

use crate::polycore::discriminant::quartic_invariants;
use crate::polycore::rational::sign;
use crate::polycore::Rational;

use super::ClassifyError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QuarticTag {
    FourRealSimple,
    TwoRealTwoComplex,
    TwoComplexPairs,
    RealDoubleTwoRealSimple,
    RealDoubleComplexPair,
    RealTripleRealSimple,
    TwoRealDoubles,
    ComplexDoublePair,
    RealQuadruple,
}

impl QuarticTag {
    /// Multiplicities of the distinct real roots, largest first.
    pub fn real_multiplicities(self) -> Vec<u32> {
        use QuarticTag::*;
        match self {
            FourRealSimple => vec![1, 1, 1, 1],
            TwoRealTwoComplex => vec![1, 1],
            TwoComplexPairs | ComplexDoublePair => vec![],
            RealDoubleTwoRealSimple => vec![2, 1, 1],
            RealDoubleComplexPair => vec![2],
            RealTripleRealSimple => vec![3, 1],
            TwoRealDoubles => vec![2, 2],
            RealQuadruple => vec![4],
        }
    }

    pub fn distinct_real_roots(self) -> usize {
        self.real_multiplicities().len()
    }
}

/// Signs (−1, 0, 1) of `Disc, P, D, R, O` and the tag they determine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuarticShape {
    pub tag: QuarticTag,
    pub disc: i32,
    pub p: i32,
    pub d: i32,
    pub r: i32,
    pub o: i32,
}

/// Classifies `a4·t⁴ + a3·t³ + a2·t² + a1·t + a0` with exact sign tests.
pub fn rees_classify(
    a4: &Rational,
    a3: &Rational,
    a2: &Rational,
    a1: &Rational,
    a0: &Rational,
) -> Result<QuarticShape, ClassifyError> {
    if sign(a4) == 0 {
        return Err(ClassifyError::NotQuartic);
    }
    let inv = quartic_invariants(a4, a3, a2, a1, a0);
    let (disc, p, d, r, o) = (
        sign(&inv.disc),
        sign(&inv.p),
        sign(&inv.d),
        sign(&inv.r),
        sign(&inv.o),
    );
    Ok(QuarticShape {
        tag: tag_from_signs(disc, p, d, r, o),
        disc,
        p,
        d,
        r,
        o,
    })
}

/// The case table. Within `Disc = 0`, `O = 0` with `D = 0` is the
/// quadruple root (where `P = D = O = 0`), `O = 0` alone the triple root;
/// with `D = 0` the two doubles are real for `P < 0` and a conjugate pair
/// for `P > 0, R = 0`. Everything else with `Disc = 0` is a single double
/// root, with two real simple roots exactly when `P < 0` and `D < 0`.
pub fn tag_from_signs(disc: i32, p: i32, d: i32, r: i32, o: i32) -> QuarticTag {
    use QuarticTag::*;
    match disc {
        -1 => TwoRealTwoComplex,
        1 => {
            if p < 0 && d < 0 {
                FourRealSimple
            } else {
                TwoComplexPairs
            }
        }
        _ => {
            if o == 0 && d == 0 {
                RealQuadruple
            } else if o == 0 {
                RealTripleRealSimple
            } else if d == 0 && p < 0 {
                TwoRealDoubles
            } else if d == 0 && p > 0 && r == 0 {
                ComplexDoublePair
            } else if p < 0 && d < 0 {
                RealDoubleTwoRealSimple
            } else {
                RealDoubleComplexPair
            }
        }
    }
}
