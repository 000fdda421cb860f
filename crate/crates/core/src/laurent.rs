//! Sparse Laurent polynomials in one variable `x` over the rationals.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent with no stored zeros, so
//! structural equality is mathematical equality. The canonical text form
//! lists exponents in descending order, e.g. `4*x^2 - 1` or `1/2*x^-3`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::BigRational;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The variable `x`.
    pub fn x() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * x^exp`.
    pub fn monomial(c: BigRational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// Collects `(exponent, coefficient)` pairs, summing repeated exponents.
    pub fn from_terms<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigRational)>,
    {
        let mut p = LaurentPoly::zero();
        for (e, c) in iter {
            p.add_term(e, &c);
        }
        p
    }

    /// Dense ascending coefficient list starting at `x^0`.
    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::from_terms(
            coeffs
                .into_iter()
                .enumerate()
                .map(|(e, c)| (e as i64, BigRational::from_integer(c.into()))),
        )
    }

    fn add_term(&mut self, exp: i64, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.terms.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigRational)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True iff no negative exponent survives.
    pub fn is_polynomial(&self) -> bool {
        self.min_degree().is_none_or(|d| d >= 0)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// Termwise `d/dx`.
    pub fn derivative(&self) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(&e, _)| e != 0)
                .map(|(&e, c)| (e - 1, c * BigRational::from_integer(e.into())))
                .collect(),
        }
    }

    pub fn eval(&self, x0: &BigRational) -> Result<BigRational> {
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        if x0.is_zero() {
            if !self.is_polynomial() {
                return Err(Error::DivisionByZero);
            }
            return Ok(self.coeff(0));
        }
        // Horner from the top, then rescale by x0^min.
        let lo = self.min_degree().unwrap_or(0);
        let hi = self.max_degree().unwrap_or(0);
        let mut acc = BigRational::zero();
        for e in (lo..=hi).rev() {
            acc *= x0;
            if let Some(c) = self.terms.get(&e) {
                acc += c;
            }
        }
        let base = if lo < 0 { x0.recip() } else { x0.clone() };
        Ok(acc * num_traits::pow(base, lo.unsigned_abs() as usize))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `(exponent, numerator, denominator)` in ascending exponent order.
    pub fn triples(&self) -> Vec<(i64, BigInt, BigInt)> {
        self.terms
            .iter()
            .map(|(&e, c)| (e, c.numer().clone(), c.denom().clone()))
            .collect()
    }

    /// Integer numerators over one common denominator.
    fn integer_form(&self) -> (Vec<(i64, BigInt)>, BigInt) {
        let denom = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums = self
            .terms
            .iter()
            .map(|(&e, c)| (e, c.numer() * (&denom / c.denom())))
            .collect();
        (nums, denom)
    }

    fn mul_ref(&self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let (a, da) = self.integer_form();
        let (b, db) = rhs.integer_form();
        let lo = a[0].0 + b[0].0;
        let span = (a[a.len() - 1].0 - a[0].0 + b[b.len() - 1].0 - b[0].0 + 1) as usize;
        let denom = da * db;

        if span <= 4 * a.len() * b.len() + 64 {
            let mut acc = vec![BigInt::zero(); span];
            for (ea, ca) in &a {
                for (eb, cb) in &b {
                    acc[(ea + eb - lo) as usize] += ca * cb;
                }
            }
            let terms = acc
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (lo + k as i64, BigRational::new(c, denom.clone())))
                .collect();
            return LaurentPoly { terms };
        }

        let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                *acc.entry(ea + eb).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        LaurentPoly {
            terms: acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (e, BigRational::new(c, denom.clone())))
                .collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (&e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if e == 1 {
                f.write_str("x")?;
            } else {
                write!(f, "x^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Accepts the canonical rendering (and any term order, with or without
    /// spaces).
    fn from_str(s: &str) -> Result<Self> {
        let src: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if src.is_empty() {
            return Err(Error::Parse("empty input".into()));
        }
        let mut p = TermParser { src: &src, pos: 0 };
        let mut out = LaurentPoly::zero();
        let mut first = true;
        while p.pos < src.len() {
            let negative = match p.peek() {
                Some('+') if !first => {
                    p.pos += 1;
                    false
                }
                Some('-') => {
                    p.pos += 1;
                    true
                }
                _ if first => false,
                other => return Err(Error::Parse(format!("expected sign, found {other:?}"))),
            };
            first = false;
            let (e, c) = p.term()?;
            out.add_term(e, &if negative { -c } else { c });
        }
        Ok(out)
    }
}

struct TermParser<'a> {
    src: &'a [char],
    pos: usize,
}

impl TermParser<'_> {
    fn peek(&self) -> Option<char> {
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse(format!("expected digits at offset {start}")));
        }
        let text: String = self.src[start..self.pos].iter().collect();
        text.parse().map_err(|_| Error::Parse(text))
    }

    fn term(&mut self) -> Result<(i64, BigRational)> {
        let coeff = if self.peek() == Some('x') {
            BigRational::one()
        } else {
            let num = self.digits()?;
            let den = if self.peek() == Some('/') {
                self.pos += 1;
                self.digits()?
            } else {
                BigInt::one()
            };
            if den.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            let c = BigRational::new(num, den);
            if self.peek() != Some('*') {
                return Ok((0, c));
            }
            self.pos += 1;
            c
        };
        if self.peek() != Some('x') {
            return Err(Error::Parse(format!("expected 'x' at offset {}", self.pos)));
        }
        self.pos += 1;
        if self.peek() != Some('^') {
            return Ok((1, coeff));
        }
        self.pos += 1;
        let negative = self.peek() == Some('-');
        if negative {
            self.pos += 1;
        }
        let mag: i64 = self
            .digits()?
            .try_into()
            .map_err(|_| Error::Parse("exponent out of range".into()))?;
        Ok((if negative { -mag } else { mag }, coeff))
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, &-c);
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.mul_ref(rhs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident::$method:ident),*) => {$(
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl From<BigRational> for LaurentPoly {
    fn from(c: BigRational) -> Self {
        LaurentPoly::constant(c)
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, ratio};

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn addition() {
        assert_eq!(lp("x + 1") + lp("x^-1 - 1"), lp("x + x^-1"));
        assert_eq!(lp("3*x^2 - x") + LaurentPoly::zero(), lp("3*x^2 - x"));
        assert_eq!(lp("2*x") + lp("2*x"), lp("4*x"));
        assert!((lp("x^-2 + 1") - lp("x^-2 + 1")).is_zero());
    }

    #[test]
    fn multiplication() {
        assert_eq!(lp("x^-2") * lp("x^3"), LaurentPoly::x());
        assert_eq!(lp("2*x - 1") * lp("2*x + 1"), lp("4*x^2 - 1"));
        assert!((lp("x + 1") * LaurentPoly::zero()).is_zero());
        assert_eq!(lp("1/2*x + 1/3") * lp("2/3*x^-1"), lp("1/3 + 2/9*x^-1"));
        // sparse path: wide exponent gap
        assert_eq!(lp("x^5000 + 1") * lp("x^-5000 - 1"), lp("1 - x^5000 + x^-5000 - 1"));
    }

    #[test]
    fn shift() {
        assert_eq!(lp("x^2 + 1").shift(-3), lp("x^-1 + x^-3"));
        let p = lp("7/2*x^4 - x + 2*x^-9");
        assert_eq!(p.shift(0), p);
        assert_eq!(p.shift(11).shift(-11), p);
    }

    #[test]
    fn evaluation() {
        assert_eq!(lp("4*x^2 - 1").eval(&int(1)).unwrap(), int(3));
        assert_eq!(lp("x^-1").eval(&int(2)).unwrap(), ratio(1, 2));
        assert_eq!(LaurentPoly::zero().eval(&int(0)).unwrap(), int(0));
        assert_eq!(lp("x^2 + 5").eval(&int(0)).unwrap(), int(5));
        assert_eq!(lp("x^-1 + x").eval(&int(0)), Err(Error::DivisionByZero));
        assert_eq!(lp("x^3 - 2*x^-2").eval(&ratio(-1, 2)).unwrap(), ratio(-65, 8));
    }

    #[test]
    fn derivative() {
        assert_eq!(lp("x^3").derivative(), lp("3*x^2"));
        assert_eq!(lp("x^-1").derivative(), lp("-x^-2"));
        assert!(lp("5/7").derivative().is_zero());
    }

    #[test]
    fn polynomial_predicate() {
        assert!(lp("4*x^2 - 1").is_polynomial());
        assert!(!lp("x^-1 + x").is_polynomial());
        assert!(LaurentPoly::zero().is_polynomial());
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!(lp("-1 + 4*x^2").to_string(), "4*x^2 - 1");
        assert_eq!(lp("1/2*x^-3").to_string(), "1/2*x^-3");
        assert_eq!(lp("-x + 3/2*x^2 - 1/2").to_string(), "3/2*x^2 - x - 1/2");
        assert_eq!(lp("-x^-1").to_string(), "-x^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(lp("2/4*x").to_string(), "1/2*x");
    }

    #[test]
    fn parse_errors() {
        assert!("".parse::<LaurentPoly>().is_err());
        assert!("x^".parse::<LaurentPoly>().is_err());
        assert!("1/0".parse::<LaurentPoly>().is_err());
        assert!("2x".parse::<LaurentPoly>().is_err());
        assert!("y".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn no_stored_zeros() {
        let p = LaurentPoly::from_terms([(1, int(2)), (1, int(-2)), (0, int(0))]);
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
        assert_eq!(p.min_degree(), None);
    }
}
