//! Sparse polynomials in `(p, x, y)` over the rationals, Laurent in `p`.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose derived
//! ordering is lexicographic with `p ≻ x ≻ y`. The largest key is the
//! lex-leading term. Zero coefficients are never stored.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, is_one_abs, to_f64, Rational};
use super::ring::{ExactDiv, Ring};
use super::unipoly::UniPolyR;
use super::PolyError;

/// Exponent triple. `p` may be negative, `x` and `y` never are.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub p: i32,
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { p: 0, x: 0, y: 0 };

    pub fn new(p: i32, x: u32, y: u32) -> Self {
        Monomial { p, x, y }
    }

    fn times(self, other: Monomial) -> Monomial {
        Monomial {
            p: self.p + other.p,
            x: self.x + other.x,
            y: self.y + other.y,
        }
    }

    /// `self / other` if the quotient keeps `x`, `y` exponents non-negative.
    fn over(self, other: Monomial) -> Option<Monomial> {
        Some(Monomial {
            p: self.p - other.p,
            x: self.x.checked_sub(other.x)?,
            y: self.y.checked_sub(other.y)?,
        })
    }
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly3 {
    terms: BTreeMap<Monomial, Rational>,
}

impl fmt::Debug for LaurentPoly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly3({self})")
    }
}

impl LaurentPoly3 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, Monomial::ONE)
    }

    pub fn monomial(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly3 { terms }
    }

    pub fn p() -> Self {
        Self::monomial(Rational::one(), Monomial::new(1, 0, 0))
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), Monomial::new(0, 1, 0))
    }

    pub fn y() -> Self {
        Self::monomial(Rational::one(), Monomial::new(0, 0, 1))
    }

    /// Builds from arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut out = LaurentPoly3::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: Monomial) -> Rational {
        self.terms.get(&m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Lex-leading term (`p ≻ x ≻ y`).
    pub fn leading_term(&self) -> Option<(Monomial, &Rational)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    /// Smallest and largest `p` exponent, `None` for zero.
    pub fn p_range(&self) -> Option<(i32, i32)> {
        let lo = self.terms.keys().map(|m| m.p).min()?;
        let hi = self.terms.keys().map(|m| m.p).max()?;
        Some((lo, hi))
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// True when no term involves `p`.
    pub fn is_free_of_p(&self) -> bool {
        self.terms.keys().all(|m| m.p == 0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly3 {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// Multiplies by `p^k`.
    pub fn shift_p(&self, k: i32) -> Self {
        LaurentPoly3 {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.p + k, m.x, m.y), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Applies `(p, x, y) ↦ (sp·p, sx·x, sy·y)` with signs `±1`.
    pub fn flip_signs(&self, sp: bool, sx: bool, sy: bool) -> Self {
        LaurentPoly3 {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let odd = (sp && m.p.rem_euclid(2) == 1)
                        ^ (sx && m.x % 2 == 1)
                        ^ (sy && m.y % 2 == 1);
                    (*m, if odd { -c } else { c.clone() })
                })
                .collect(),
        }
    }

    /// Common denominator form: integer numerators and one positive denominator.
    fn integer_form(&self) -> (Vec<(Monomial, BigInt)>, BigInt) {
        let den = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums = self
            .terms
            .iter()
            .map(|(m, c)| (*m, c.numer() * (&den / c.denom())))
            .collect();
        (nums, den)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (a, da) = self.integer_form();
        let (b, db) = other.integer_form();
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(a.len() * b.len() / 2 + 1);
        for (ma, ca) in &a {
            for (mb, cb) in &b {
                let slot = acc.entry(ma.times(*mb)).or_insert_with(BigInt::zero);
                *slot += ca * cb;
            }
        }
        let den = da * db;
        LaurentPoly3 {
            terms: acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m, Rational::new(c, den.clone())))
                .collect(),
        }
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Powers of `p` are units, so both operands are first shifted to have
    /// smallest `p` exponent zero; the quotient of two such polynomials, if it
    /// exists in the Laurent ring, is then an ordinary polynomial and lex
    /// long division finds it.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if divisor.is_monomial() {
            let (dm, dc) = divisor.leading_term().unwrap();
            let inv = dc.recip();
            let mut terms = BTreeMap::new();
            for (m, c) in &self.terms {
                let q = m.over(dm).ok_or(PolyError::NotDivisible)?;
                terms.insert(q, c * &inv);
            }
            return Ok(LaurentPoly3 { terms });
        }
        let (a_lo, _) = self.p_range().unwrap();
        let (b_lo, _) = divisor.p_range().unwrap();
        let mut rem = self.shift_p(-a_lo);
        let b = divisor.shift_p(-b_lo);
        let (bm, bc) = b.leading_term().map(|(m, c)| (m, c.clone())).unwrap();
        let b_inv = bc.recip();
        let mut quotient = BTreeMap::new();
        while let Some((rm, rc)) = rem.leading_term() {
            let qm = rm.over(bm).ok_or(PolyError::NotDivisible)?;
            if qm.p < 0 {
                return Err(PolyError::NotDivisible);
            }
            let qc = rc * &b_inv;
            for (m, c) in &b.terms {
                rem.add_term(m.times(qm), -(c * &qc));
            }
            quotient.insert(qm, qc);
        }
        Ok(LaurentPoly3 { terms: quotient }.shift_p(a_lo - b_lo))
    }

    /// Canonical representative of `self` up to a nonzero rational times a
    /// power of `p`: smallest `p` exponent zero, integer coefficients with
    /// gcd 1, positive lex-leading coefficient.
    pub fn canonicalize(&self) -> Result<Self, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let (lo, _) = self.p_range().unwrap();
        let (nums, _) = self.integer_form();
        let content = nums
            .iter()
            .fold(BigInt::zero(), |g, (_, c)| g.gcd(c));
        let lead_negative = nums
            .iter()
            .max_by_key(|(m, _)| *m)
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false);
        let content = if lead_negative { -content } else { content };
        Ok(LaurentPoly3 {
            terms: nums
                .into_iter()
                .map(|(m, c)| {
                    (
                        Monomial::new(m.p - lo, m.x, m.y),
                        Rational::from_integer(c / &content),
                    )
                })
                .collect(),
        })
    }

    /// Substitutes a center `(x, y)`, giving a univariate polynomial in `p`.
    pub fn specialize(&self, x: &Rational, y: &Rational) -> Result<UniPolyR, PolyError> {
        if let Some((lo, _)) = self.p_range() {
            if lo < 0 {
                return Err(PolyError::NegativePExponent);
            }
        }
        let mut coeffs: BTreeMap<i32, Rational> = BTreeMap::new();
        let mut xp = PowerCache::new(x.clone());
        let mut yp = PowerCache::new(y.clone());
        for (m, c) in &self.terms {
            let v = c * xp.get(m.x) * yp.get(m.y);
            *coeffs.entry(m.p).or_insert_with(Rational::zero) += v;
        }
        let deg = coeffs.keys().next_back().copied().unwrap_or(0).max(0) as usize;
        let mut dense = vec![Rational::zero(); deg + 1];
        for (e, c) in coeffs {
            dense[e as usize] = c;
        }
        Ok(UniPolyR::new(dense))
    }

    /// Substitutes a value for `p`, leaving a polynomial in `x, y`.
    pub fn substitute_p(&self, p: &Rational) -> Result<Self, PolyError> {
        if p.is_zero() && self.terms.keys().any(|m| m.p < 0) {
            return Err(PolyError::DivisionByZero);
        }
        let mut out = LaurentPoly3::zero();
        for (m, c) in &self.terms {
            let pw = pow_i(p, m.p);
            out.add_term(Monomial::new(0, m.x, m.y), c * pw);
        }
        Ok(out)
    }

    /// Groups terms by `p` exponent; each value is free of `p`.
    pub fn coefficients_in_p(&self) -> BTreeMap<i32, LaurentPoly3> {
        let mut out: BTreeMap<i32, LaurentPoly3> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.p)
                .or_default()
                .add_term(Monomial::new(0, m.x, m.y), c.clone());
        }
        out
    }

    pub fn eval(&self, p: &Rational, x: &Rational, y: &Rational) -> Result<Rational, PolyError> {
        if p.is_zero() && self.terms.keys().any(|m| m.p < 0) {
            return Err(PolyError::DivisionByZero);
        }
        let mut xp = PowerCache::new(x.clone());
        let mut yp = PowerCache::new(y.clone());
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            acc += c * pow_i(p, m.p) * xp.get(m.x) * yp.get(m.y);
        }
        Ok(acc)
    }

    pub fn eval_f64(&self, p: f64, x: f64, y: f64) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| to_f64(c) * p.powi(m.p) * x.powi(m.x as i32) * y.powi(m.y as i32))
            .sum()
    }
}

fn pow_i(base: &Rational, e: i32) -> Rational {
    if e >= 0 {
        num_traits::pow(base.clone(), e as usize)
    } else {
        num_traits::pow(base.recip(), (-e) as usize)
    }
}

struct PowerCache {
    powers: Vec<Rational>,
}

impl PowerCache {
    fn new(base: Rational) -> Self {
        PowerCache {
            powers: vec![Rational::one(), base],
        }
    }

    fn get(&mut self, e: u32) -> &Rational {
        let e = e as usize;
        while self.powers.len() <= e {
            let next = &self.powers[self.powers.len() - 1] * &self.powers[1];
            self.powers.push(next);
        }
        &self.powers[e]
    }
}

impl From<Rational> for LaurentPoly3 {
    fn from(c: Rational) -> Self {
        LaurentPoly3::constant(c)
    }
}

impl Neg for LaurentPoly3 {
    type Output = LaurentPoly3;
    fn neg(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &LaurentPoly3 {
    type Output = LaurentPoly3;
    fn neg(self) -> LaurentPoly3 {
        -self.clone()
    }
}

impl AddAssign<&LaurentPoly3> for LaurentPoly3 {
    fn add_assign(&mut self, rhs: &LaurentPoly3) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly3> for LaurentPoly3 {
    fn sub_assign(&mut self, rhs: &LaurentPoly3) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&LaurentPoly3> for &LaurentPoly3 {
            type Output = LaurentPoly3;
            fn $method(self, rhs: &LaurentPoly3) -> LaurentPoly3 {
                let f: fn(&LaurentPoly3, &LaurentPoly3) -> LaurentPoly3 = $body;
                f(self, rhs)
            }
        }
        impl $trait<LaurentPoly3> for LaurentPoly3 {
            type Output = LaurentPoly3;
            fn $method(self, rhs: LaurentPoly3) -> LaurentPoly3 {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentPoly3> for LaurentPoly3 {
            type Output = LaurentPoly3;
            fn $method(self, rhs: &LaurentPoly3) -> LaurentPoly3 {
                (&self).$method(rhs)
            }
        }
        impl $trait<LaurentPoly3> for &LaurentPoly3 {
            type Output = LaurentPoly3;
            fn $method(self, rhs: LaurentPoly3) -> LaurentPoly3 {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| {
    let mut out = a.clone();
    out += b;
    out
});
forward_binop!(Sub, sub, |a, b| {
    let mut out = a.clone();
    out -= b;
    out
});
forward_binop!(Mul, mul, |a, b| a.mul_ref(b));

impl Zero for LaurentPoly3 {
    fn zero() -> Self {
        LaurentPoly3::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly3 {
    fn one() -> Self {
        LaurentPoly3::one()
    }
}

impl Ring for LaurentPoly3 {
    fn from_i64(n: i64) -> Self {
        LaurentPoly3::constant(super::rational::int(n))
    }
}

impl ExactDiv for LaurentPoly3 {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        LaurentPoly3::div_exact(self, divisor).ok()
    }
}

fn write_var(out: &mut Vec<String>, name: char, e: i64) {
    match e {
        0 => {}
        1 => out.push(name.to_string()),
        _ => out.push(format!("{name}^{e}")),
    }
}

/// Text form: terms in descending lex order, `c*p^a*x^b*y^c`, unit
/// coefficients and unit exponents omitted, e.g. `x^2 + y^2 - 1`.
impl fmt::Display for LaurentPoly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let mut factors = Vec::new();
            write_var(&mut factors, 'p', m.p as i64);
            write_var(&mut factors, 'x', m.x as i64);
            write_var(&mut factors, 'y', m.y as i64);
            let mono = factors.join("*");
            let mag = c.abs();
            let body = if mono.is_empty() {
                format_rational(&mag)
            } else if is_one_abs(c) {
                mono
            } else {
                format!("{}*{}", format_rational(&mag), mono)
            };
            let neg = c.is_negative();
            match (i, neg) {
                (0, false) => f.write_str(&body)?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> PolyError {
        PolyError::Parse(format!("{msg} at byte {}", self.pos))
    }

    fn digits(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(BigInt::from_str(s).unwrap())
    }

    fn factor(&mut self, coeff: &mut Rational, mono: &mut Monomial) -> Result<(), PolyError> {
        match self.peek() {
            Some(b'0'..=b'9') => {
                let n = self.digits()?;
                let mut value = Rational::from_integer(n);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let d = self.digits()?;
                    if d.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    value /= Rational::from_integer(d);
                }
                *coeff *= value;
                Ok(())
            }
            Some(v @ (b'p' | b'x' | b'y')) => {
                self.pos += 1;
                let mut e: i64 = 1;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    let neg = if self.peek() == Some(b'-') {
                        self.pos += 1;
                        true
                    } else {
                        false
                    };
                    let d = self.digits()?;
                    let d: i64 = d.try_into().map_err(|_| self.err("exponent too large"))?;
                    e = if neg { -d } else { d };
                }
                match v {
                    b'p' => mono.p += i32::try_from(e).map_err(|_| self.err("exponent too large"))?,
                    _ => {
                        let e = u32::try_from(e).map_err(|_| self.err("negative x/y exponent"))?;
                        if v == b'x' {
                            mono.x += e;
                        } else {
                            mono.y += e;
                        }
                    }
                }
                Ok(())
            }
            _ => Err(self.err("expected a number or one of p, x, y")),
        }
    }

    fn term(&mut self) -> Result<(Monomial, Rational), PolyError> {
        let mut coeff = Rational::one();
        let mut mono = Monomial::ONE;
        self.factor(&mut coeff, &mut mono)?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            self.factor(&mut coeff, &mut mono)?;
        }
        Ok((mono, coeff))
    }

    fn poly(&mut self) -> Result<LaurentPoly3, PolyError> {
        let mut out = LaurentPoly3::zero();
        let mut first = true;
        loop {
            let mut negative = match self.peek() {
                None if !first => break,
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => return Err(self.err("expected '+' or '-'")),
            };
            // one unary sign may follow a binary one: `x + -1`
            match self.peek() {
                Some(b'-') => {
                    self.pos += 1;
                    negative = !negative;
                }
                Some(b'+') => self.pos += 1,
                _ => {}
            }
            let (m, c) = self.term()?;
            out.add_term(m, if negative { -c } else { c });
            first = false;
        }
        Ok(out)
    }
}

impl FromStr for LaurentPoly3 {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        if parser.peek().is_none() {
            return Err(PolyError::Parse("empty polynomial".into()));
        }
        parser.poly()
    }
}
