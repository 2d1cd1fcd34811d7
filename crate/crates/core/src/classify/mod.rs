//! Decisions for a fixed circle centre `E`: which parabolas of the family
//! close `n`-gons, how many, in which region of the plane `E` lies, and
//! whether the whole family is isoperiodic.

pub mod closed_form;
pub mod identities;
pub mod rees;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cayley::{locus, CayleyError};
use crate::polycore::rational::sign;
use crate::polycore::{
    format_rational, int, parse_rational, sturm_real_roots, PolyError, Rational, RootList,
    UniPolyR,
};

pub use closed_form::{
    gamma5_double_root, gamma6_double_root, roots_5_closed_form, roots_5_closed_form_f64,
    roots_6_closed_form, roots_6_closed_form_f64, unique_p_for_4, ClosedFormRoots,
};
pub use rees::{rees_classify, QuarticShape, QuarticTag};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("leading coefficient is zero")]
    NotQuartic,
    #[error("the centre is on the latus rectum line x = 0")]
    OnLatusRectumLine,
    #[error("the centre is on the unit circle")]
    OnUnitCircle,
    #[error("the centre is the focus")]
    AtFocus,
    #[error("the centre lies on the unit circle or at the focus")]
    ExcludedCenter,
    #[error("region analysis is available for 3 <= n <= 7, got {0}")]
    UnsupportedN(u32),
    #[error("isoperiodicity test disagrees with the locus polynomials at n = {0}")]
    InconsistentIsoperiodicity(u32),
    #[error(transparent)]
    Cayley(#[from] CayleyError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Centre `E = (x, y)` of the unit circle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Center {
    pub x: Rational,
    pub y: Rational,
}

impl Center {
    pub fn new(x: Rational, y: Rational) -> Self {
        Center { x, y }
    }

    pub fn from_i64(x: i64, y: i64) -> Self {
        Center::new(int(x), int(y))
    }

    /// `x² + y²`.
    pub fn r2(&self) -> Rational {
        &self.x * &self.x + &self.y * &self.y
    }

    pub fn on_unit_circle(&self) -> bool {
        self.r2().is_one()
    }

    pub fn is_focus(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// On the unit circle or at the focus.
    pub fn in_sigma(&self) -> bool {
        self.on_unit_circle() || self.is_focus()
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (crate::polycore::to_f64(&self.x), crate::polycore::to_f64(&self.y))
    }
}

impl fmt::Display for Center {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", format_rational(&self.x), format_rational(&self.y))
    }
}

/// Parses `"x,y"` with each coordinate as `n/d` or an exact decimal.
impl FromStr for Center {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (x, y) = s
            .split_once(',')
            .ok_or_else(|| PolyError::Parse(format!("expected \"x,y\", got {s:?}")))?;
        Ok(Center::new(parse_rational(x.trim())?, parse_rational(y.trim())?))
    }
}

/// `Qⁿ(p, x_E, y_E)`; the zero polynomial when every parabola works.
pub fn p_polynomial(n: u32, e: &Center) -> Result<UniPolyR, ClassifyError> {
    Ok(locus(n)?.canonical.specialize(&e.x, &e.y)?)
}

/// Where the centre lies, as far as the root structure for `n` is concerned.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Region {
    /// n = 3, centre on the unit circle (isoperiodic).
    S1,
    /// n = 3, any other centre.
    OffS1,
    /// n = 4, centre at the focus (isoperiodic).
    Focus,
    /// n = 4, centre on the unit circle.
    UnitCircle4,
    /// n = 4, centre on `x = 0` away from the focus.
    LatusRectum,
    /// n = 4, one pair.
    Generic4,
    Gamma5Plus,
    Gamma5,
    Gamma5Minus,
    Gamma6Plus,
    Gamma6,
    Gamma6Minus,
    /// n = 7, `Ψ₁ < 0` (inside the unit circle).
    R1Minus,
    /// n = 7, `Ψ₁ = 0`.
    R1,
    /// n = 7, `Ψ₁ > 0` inside the unit circle.
    R1PlusInsideS1,
    /// n = 7, outside the unit circle.
    OutsideS1,
    /// n ≥ 5 and the centre is on the unit circle or at the focus.
    Excluded,
}

impl Region {
    pub fn label(self) -> &'static str {
        use Region::*;
        match self {
            S1 => "S1",
            OffS1 => "OffS1",
            Focus => "Focus",
            UnitCircle4 => "S1",
            LatusRectum => "LatusRectum",
            Generic4 => "Generic",
            Gamma5Plus => "Gamma5+",
            Gamma5 => "Gamma5",
            Gamma5Minus => "Gamma5-",
            Gamma6Plus => "Gamma6+",
            Gamma6 => "Gamma6",
            Gamma6Minus => "Gamma6-",
            R1Minus => "R1-",
            R1 => "R1",
            R1PlusInsideS1 => "R1+S1-",
            OutsideS1 => "S1+",
            Excluded => "Excluded",
        }
    }

    /// Number of distinct real nonzero parameters the region predicts, when
    /// it is determined by the region alone.
    pub fn expected_count(self) -> Option<usize> {
        use Region::*;
        match self {
            OffS1 | UnitCircle4 | LatusRectum | Gamma5Minus | Gamma6Minus => Some(0),
            Generic4 | Gamma5 | Gamma6 => Some(1),
            Gamma5Plus | R1Minus | OutsideS1 => Some(2),
            R1 => Some(3),
            R1PlusInsideS1 => Some(4),
            // on Λ⁶ ∩ S¹₊ one root of the hexagon quadratic is p = 0
            Gamma6Plus => None,
            S1 | Focus | Excluded => None,
        }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Region of `e` for `3 ≤ n ≤ 7`, from exact sign evaluations.
pub fn region(n: u32, e: &Center) -> Result<Region, ClassifyError> {
    let r = e.r2();
    let y2 = &e.y * &e.y;
    let region = match n {
        3 if e.on_unit_circle() => Region::S1,
        3 => Region::OffS1,
        4 if e.is_focus() => Region::Focus,
        4 if e.on_unit_circle() => Region::UnitCircle4,
        4 if e.x.is_zero() => Region::LatusRectum,
        4 => Region::Generic4,
        5..=7 if e.in_sigma() => Region::Excluded,
        5 => match sign(&(&r * &r - &y2)) {
            1 => Region::Gamma5Plus,
            0 => Region::Gamma5,
            _ => Region::Gamma5Minus,
        },
        6 => match sign(&(&r * &r * &r - &y2)) {
            1 => Region::Gamma6Plus,
            0 => Region::Gamma6,
            _ => Region::Gamma6Minus,
        },
        7 => {
            if r > Rational::one() {
                Region::OutsideS1
            } else {
                match sign(&psi_values(e)[0]) {
                    1 => Region::R1PlusInsideS1,
                    0 => Region::R1,
                    _ => Region::R1Minus,
                }
            }
        }
        _ => return Err(ClassifyError::UnsupportedN(n)),
    };
    Ok(region)
}

#[derive(Clone, Debug, PartialEq)]
pub struct PairClassification {
    pub n: u32,
    pub center: Center,
    /// Real roots in `p`, `p = 0` excluded; empty when isoperiodic.
    pub p_roots: RootList,
    pub region: Region,
    /// Distinct real nonzero `p`; a double root is one parabola.
    pub count: usize,
    pub isoperiodic: bool,
}

/// Full decision for `3 ≤ n ≤ 7`.
pub fn pair_classify(n: u32, e: &Center) -> Result<PairClassification, ClassifyError> {
    if !(3..=7).contains(&n) {
        return Err(ClassifyError::UnsupportedN(n));
    }
    let region = region(n, e)?;
    let poly = p_polynomial(n, e)?;
    let (p_roots, isoperiodic) = if poly.is_zero() {
        (RootList::default(), true)
    } else {
        (sturm_real_roots(&poly, true)?, false)
    };
    Ok(PairClassification {
        n,
        center: e.clone(),
        count: p_roots.len(),
        p_roots,
        region,
        isoperiodic,
    })
}

/// JSON form of a classification.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub n: u32,
    pub center: [String; 2],
    pub region: String,
    pub roots: Vec<RootReport>,
    pub count: usize,
    pub isoperiodic: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootReport {
    pub p: f64,
    pub multiplicity: u32,
}

impl PairClassification {
    pub fn report(&self) -> ClassificationReport {
        ClassificationReport {
            n: self.n,
            center: [format_rational(&self.center.x), format_rational(&self.center.y)],
            region: self.region.label().to_string(),
            roots: self
                .p_roots
                .roots
                .iter()
                .map(|r| RootReport {
                    p: r.value,
                    multiplicity: r.multiplicity,
                })
                .collect(),
            count: self.count,
            isoperiodic: self.isoperiodic,
        }
    }
}

/// `Ψ₁, …, Ψ₅` at `e`.
pub fn psi_values(e: &Center) -> [Rational; 5] {
    identities::psi_polys().map(|psi| {
        psi.eval(&Rational::one(), &e.x, &e.y)
            .expect("Ψ polynomials are free of p")
    })
}

/// `Some(3)` on the unit circle, `Some(4)` at the focus, `None` otherwise.
/// The answer is cross-checked against the locus polynomials for
/// `n = 3..7`: the returned `n` must give the zero polynomial, no other must.
pub fn isoperiodic_n(e: &Center) -> Result<Option<u32>, ClassifyError> {
    let claimed = if e.on_unit_circle() {
        Some(3)
    } else if e.is_focus() {
        Some(4)
    } else {
        None
    };
    for n in 3..=7 {
        let vanishes = p_polynomial(n, e)?.is_zero();
        if vanishes != (claimed == Some(n)) {
            return Err(ClassifyError::InconsistentIsoperiodicity(n));
        }
    }
    Ok(claimed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat;

    #[test]
    fn parses_centres() {
        let c: Center = "1/2, -0.25".parse().unwrap();
        assert_eq!(c, Center::new(rat(1, 2), rat(-1, 4)));
        assert!("1/2".parse::<Center>().is_err());
    }

    #[test]
    fn specialised_polynomials() {
        assert_eq!(p_polynomial(4, &Center::from_i64(2, 0)).unwrap(), UniPolyR::from_i64(&[6, 4]));
        assert!(p_polynomial(3, &Center::new(rat(3, 5), rat(4, 5))).unwrap().is_zero());
        let q7 = p_polynomial(7, &Center::new(int(0), rat(1, 2))).unwrap();
        // proportional to p^4/4 − 27p²/64 − 729/4096
        let target = UniPolyR::new(vec![rat(-729, 4096), int(0), rat(-27, 64), int(0), rat(1, 4)]);
        assert_eq!(q7.monic(), target.monic());
    }

    #[test]
    fn worked_classifications() {
        let c = pair_classify(5, &Center::from_i64(0, 2)).unwrap();
        assert_eq!((c.region, c.count), (Region::Gamma5Plus, 2));
        let c = pair_classify(5, &Center::new(rat(1, 2), rat(1, 2))).unwrap();
        assert_eq!((c.region, c.count), (Region::Gamma5, 1));
        assert_eq!(c.p_roots.roots[0].multiplicity, 2);
        let c = pair_classify(7, &Center::new(int(0), rat(1, 2))).unwrap();
        assert_eq!((c.region, c.count), (Region::R1Minus, 2));
        assert!((c.p_roots.roots[1].value - 1.42724).abs() < 1e-5);
        let c = pair_classify(4, &Center::from_i64(2, 0)).unwrap();
        assert_eq!(c.count, 1);
        assert!((c.p_roots.roots[0].value + 1.5).abs() < 1e-12);
        let c = pair_classify(3, &Center::new(rat(3, 5), rat(4, 5))).unwrap();
        assert!(c.isoperiodic && c.region == Region::S1);
        assert_eq!(pair_classify(6, &Center::from_i64(0, 0)).unwrap().region, Region::Excluded);
    }

    #[test]
    fn psi_at_sample_points() {
        let v = psi_values(&Center::new(int(0), rat(1, 2)));
        assert_eq!(v[0], rat(-27, 64));
        assert_eq!(psi_values(&Center::from_i64(0, 0))[1], int(2));
        assert!(psi_values(&Center::new(rat(1, 2), rat(1, 2)))[4] != int(0));
        assert_eq!(psi_values(&Center::new(rat(2, 3), rat(1, 3)))[4], int(0));
    }

    #[test]
    fn isoperiodic_centres() {
        assert_eq!(isoperiodic_n(&Center::new(rat(3, 5), rat(4, 5))).unwrap(), Some(3));
        assert_eq!(isoperiodic_n(&Center::from_i64(0, 0)).unwrap(), Some(4));
        assert_eq!(isoperiodic_n(&Center::new(int(0), rat(1, 2))).unwrap(), None);
    }

    #[test]
    fn report_round_trips() {
        let c = pair_classify(6, &Center::from_i64(2, 0)).unwrap();
        let json = serde_json::to_string(&c.report()).unwrap();
        let back: ClassificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c.report());
        assert_eq!(back.center, ["2".to_string(), "0".to_string()]);
    }
}
