//! Truncated power series in `t` whose coefficients are Laurent polynomials
//! in `x`.
//!
//! A series carries its truncation order explicitly; binary operations on
//! operands of different orders truncate to the shorter one.

use std::fmt;

use crate::arith::{binomial, BigRational};
use crate::error::{Error, Result};
use crate::families::{self, Kind};
use crate::laurent::LaurentPoly;
use crate::ring::Symbolic;

#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<LaurentPoly>,
}

impl TruncatedSeries {
    /// Series whose `t^m` coefficient is `coeffs[m]`; order is `len - 1`.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn new(coeffs: Vec<LaurentPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least one coefficient");
        TruncatedSeries { coeffs }
    }

    /// A polynomial in `t`, padded with zeros or truncated to `order`.
    pub fn from_poly(coeffs: &[LaurentPoly], order: usize) -> Self {
        let mut c: Vec<LaurentPoly> = coeffs.iter().take(order + 1).cloned().collect();
        c.resize(order + 1, LaurentPoly::zero());
        TruncatedSeries { coeffs: c }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![LaurentPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(LaurentPoly::one(), order)
    }

    pub fn constant(c: LaurentPoly, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `1 - 2xt + t^2`.
    pub fn chebyshev_denominator(order: usize) -> Self {
        let two_x: LaurentPoly = LaurentPoly::x().scale(&BigRational::from_integer(2.into()));
        Self::from_poly(&[LaurentPoly::one(), -two_x, LaurentPoly::one()], order)
    }

    /// `x - t`.
    pub fn x_minus_t(order: usize) -> Self {
        Self::from_poly(&[LaurentPoly::x(), -LaurentPoly::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, m: usize) -> &LaurentPoly {
        &self.coeffs[m]
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<LaurentPoly> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_poly(&self.coeffs, order.min(self.order()))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LaurentPoly::is_zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order).map(|m| &self.coeffs[m] + &rhs.coeffs[m]).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order).map(|m| &self.coeffs[m] - &rhs.coeffs[m]).collect(),
        }
    }

    /// Multiplies every coefficient by the same Laurent polynomial.
    pub fn scale(&self, c: &LaurentPoly) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|p| p * c).collect(),
        }
    }

    /// Cauchy product at `min(order_a, order_b)`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|m| {
                let mut acc = LaurentPoly::zero();
                for j in 0..=m {
                    let (a, b) = (&self.coeffs[j], &rhs.coeffs[m - j]);
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Multiplicative inverse; the constant coefficient must be a nonzero
    /// constant.
    pub fn inverse(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.num_terms() != 1 || a0.min_degree() != Some(0) {
            return Err(Error::NotInvertible);
        }
        let inv_a0 = a0.coeff(0).recip();
        let neg_inv = -inv_a0.clone();
        let mut out: Vec<LaurentPoly> = Vec::with_capacity(self.coeffs.len());
        out.push(LaurentPoly::constant(inv_a0));
        for m in 1..=self.order() {
            let mut acc = LaurentPoly::zero();
            for j in 1..=m {
                let a = &self.coeffs[j];
                if !a.is_zero() {
                    acc += &(a * &out[m - j]);
                }
            }
            out.push(acc.scale(&neg_inv));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `k`-fold product, `k >= 1`.
    pub fn pow(&self, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidOrder(0));
        }
        let mut base = self.clone();
        let mut acc: Option<Self> = None;
        let mut e = k;
        loop {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul(&base);
        }
        Ok(acc.expect("k >= 1"))
    }

    /// `d/dt`; the order drops by one.
    pub fn derivative_t(&self) -> Result<Self> {
        if self.order() == 0 {
            return Err(Error::OrderZeroDerivative);
        }
        let coeffs = (1..=self.order())
            .map(|m| self.coeffs[m].scale(&BigRational::from_integer((m as i64).into())))
            .collect();
        Ok(TruncatedSeries { coeffs })
    }

    /// `(d/dt)^i`.
    pub fn nth_derivative_t(&self, i: usize) -> Result<Self> {
        let mut s = self.clone();
        for _ in 0..i {
            s = s.derivative_t()?;
        }
        Ok(s)
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("TruncatedSeries[")?;
        for (m, c) in self.coeffs.iter().enumerate() {
            if m > 0 {
                f.write_str(", ")?;
            }
            write!(f, "t^{m}: {c}")?;
        }
        write!(f, "; O(t^{})]", self.order() + 1)
    }
}

/// `(x - t)^{-k}` expanded in `t`: the `t^m` coefficient is
/// `C(k - 1 + m, m) * x^{-k-m}`.
pub fn expand_negpow_xt(k: u32, order: usize) -> Result<TruncatedSeries> {
    if k == 0 {
        return Err(Error::InvalidOrder(0));
    }
    let k = k as i64;
    let coeffs = (0..=order as i64)
        .map(|m| {
            let c = BigRational::from_integer(binomial(k - 1 + m, m)?);
            Ok(LaurentPoly::monomial(c, -k - m))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TruncatedSeries { coeffs })
}

/// Numerator of the rational generating function `numerator / (1 - 2xt + t^2)`
/// for the kinds that have one.
fn gf_numerator(kind: Kind, order: usize) -> Option<TruncatedSeries> {
    let one = LaurentPoly::one;
    let coeffs = match kind {
        Kind::U => vec![one()],
        Kind::V => vec![one(), -one()],
        Kind::W => vec![one(), one()],
        Kind::TGf => vec![one(), LaurentPoly::zero(), -one()],
        Kind::TClassical => vec![one(), -LaurentPoly::x()],
        Kind::Legendre => return None,
    };
    Some(TruncatedSeries::from_poly(&coeffs, order))
}

/// Expands the `alpha`-th power of a family's generating function to `order`.
///
/// Rational generating functions are expanded by series inversion of
/// `1 - 2xt + t^2`. The Legendre generating function is a square root, so its
/// base coefficients come from the three-term recurrence and only the
/// integer power is taken here.
pub fn gf_expand(kind: Kind, alpha: u32, order: usize) -> Result<TruncatedSeries> {
    if alpha == 0 {
        return Err(Error::InvalidOrder(0));
    }
    if kind == Kind::TClassical && alpha > 1 {
        return Err(Error::ClassicalHigherOrder(alpha));
    }
    let base = match gf_numerator(kind, order) {
        Some(num) => num.mul(&TruncatedSeries::chebyshev_denominator(order).inverse()?),
        None => TruncatedSeries::new(families::base_row(&Symbolic, Kind::Legendre, order)),
    };
    base.pow(alpha)
}

/// `F(t, x) = 1 / (1 - 2tx + t^2)` to the given order.
pub fn chebyshev_f(order: usize) -> TruncatedSeries {
    TruncatedSeries::chebyshev_denominator(order)
        .inverse()
        .expect("constant coefficient is 1")
}

impl TruncatedSeries {
    /// Coefficientwise equality up to `order` (both operands must reach it).
    pub fn agrees_to(&self, rhs: &Self, order: usize) -> bool {
        order <= self.order()
            && order <= rhs.order()
            && (0..=order).all(|m| self.coeffs[m] == rhs.coeffs[m])
    }

    /// First nonzero coefficient of `self - rhs`, or zero.
    pub fn first_difference(&self, rhs: &Self) -> LaurentPoly {
        self.sub(rhs)
            .coeffs
            .into_iter()
            .find(|c| !c.is_zero())
            .unwrap_or_else(LaurentPoly::zero)
    }
}

impl TruncatedSeries {
    pub fn is_one(&self) -> bool {
        self.coeffs[0] == LaurentPoly::one() && self.coeffs[1..].iter().all(LaurentPoly::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn series(cs: &[&str]) -> TruncatedSeries {
        TruncatedSeries::new(cs.iter().map(|s| lp(s)).collect())
    }

    #[test]
    fn mul_small() {
        let a = series(&["1", "1", "0"]);
        let b = series(&["1", "-1", "0"]);
        assert_eq!(a.mul(&b), series(&["1", "0", "-1"]));
        assert_eq!(a.mul(&TruncatedSeries::one(2)), a);
    }

    #[test]
    fn mixed_orders_truncate() {
        let a = series(&["1", "x", "x^2", "x^3"]);
        let b = series(&["2", "1"]);
        let p = a.mul(&b);
        assert_eq!(p.order(), 1);
        assert_eq!(p, series(&["2", "1 + 2*x"]));
        assert_eq!(a.add(&b).order(), 1);
    }

    #[test]
    fn inverse_geometric() {
        let a = series(&["1", "-1", "0", "0"]);
        assert_eq!(a.inverse().unwrap(), series(&["1", "1", "1", "1"]));
    }

    #[test]
    fn inverse_of_denominator() {
        let f = chebyshev_f(4);
        assert_eq!(f.coeff(1), &lp("2*x"));
        assert_eq!(f.coeff(2), &lp("4*x^2 - 1"));
        assert!(f.mul(&TruncatedSeries::chebyshev_denominator(4)).is_one());
    }

    #[test]
    fn inverse_round_trip_all_orders() {
        for m in [0, 1, 5, 17, 32] {
            let f = chebyshev_f(m);
            assert!(f.mul(&TruncatedSeries::chebyshev_denominator(m)).is_one(), "order {m}");
            assert_eq!(f.inverse().unwrap(), TruncatedSeries::chebyshev_denominator(m));
        }
    }

    #[test]
    fn inverse_rejects_nonconstant_head() {
        assert_eq!(series(&["x", "1"]).inverse(), Err(Error::NotInvertible));
        assert_eq!(series(&["0", "1"]).inverse(), Err(Error::NotInvertible));
        assert_eq!(series(&["1 + x", "1"]).inverse(), Err(Error::NotInvertible));
        // any nonzero constant works
        let half = series(&["2", "1", "0"]).inverse().unwrap();
        assert_eq!(half, series(&["1/2", "-1/4", "1/8"]));
    }

    #[test]
    fn powers() {
        let a = series(&["1", "1", "0"]);
        assert_eq!(a.pow(1).unwrap(), a);
        assert_eq!(a.pow(2).unwrap(), series(&["1", "2", "1"]));
        assert_eq!(a.pow(5).unwrap(), series(&["1", "5", "10"]));
        assert!(a.pow(0).is_err());
    }

    #[test]
    fn derivative() {
        let a = series(&["1", "3", "1"]);
        assert_eq!(a.derivative_t().unwrap(), series(&["3", "2"]));
        assert!(series(&["5", "0", "0"]).derivative_t().unwrap().is_zero());
        assert_eq!(series(&["1"]).derivative_t(), Err(Error::OrderZeroDerivative));
    }

    #[test]
    fn derivative_of_f_is_two_x_minus_t_f_squared() {
        let m = 20;
        let f = chebyshev_f(m);
        let lhs = f.derivative_t().unwrap();
        let rhs = TruncatedSeries::x_minus_t(m)
            .mul(&f.pow(2).unwrap())
            .scale(&LaurentPoly::constant(int(2)));
        assert!(lhs.agrees_to(&rhs, m - 1));
    }

    #[test]
    fn negpow_expansion() {
        let s = expand_negpow_xt(1, 3).unwrap();
        for m in 0..=3 {
            assert_eq!(s.coeff(m), &LaurentPoly::monomial(int(1), -1 - m as i64));
        }
        assert_eq!(expand_negpow_xt(2, 3).unwrap().coeff(1), &lp("2*x^-3"));
        assert!(expand_negpow_xt(0, 3).is_err());
        for k in 1..=6u32 {
            let m = 12;
            let back = expand_negpow_xt(k, m)
                .unwrap()
                .mul(&TruncatedSeries::x_minus_t(m).pow(k).unwrap());
            assert!(back.is_one(), "k = {k}");
        }
    }

    #[test]
    fn gf_low_coefficients() {
        assert_eq!(gf_expand(Kind::U, 1, 3).unwrap().coeff(1), &lp("2*x"));
        assert_eq!(gf_expand(Kind::W, 1, 3).unwrap().coeff(1), &lp("2*x + 1"));
        assert_eq!(gf_expand(Kind::V, 1, 3).unwrap().coeff(1), &lp("2*x - 1"));
        assert_eq!(gf_expand(Kind::TGf, 1, 3).unwrap().coeff(2), &lp("4*x^2 - 2"));
        assert_eq!(gf_expand(Kind::TClassical, 1, 3).unwrap().coeff(2), &lp("2*x^2 - 1"));
        assert_eq!(gf_expand(Kind::U, 2, 3).unwrap().coeff(1), &lp("4*x"));
        assert_eq!(gf_expand(Kind::Legendre, 1, 3).unwrap().coeff(2), &lp("3/2*x^2 - 1/2"));
    }

    #[test]
    fn gf_rejects_bad_orders() {
        assert!(gf_expand(Kind::U, 0, 3).is_err());
        assert_eq!(
            gf_expand(Kind::TClassical, 2, 3),
            Err(Error::ClassicalHigherOrder(2))
        );
    }

    #[test]
    fn identity_one_minus_t2_times_f2() {
        // (1 - t^2) F^2 has t^n coefficient (n + 1) U_n
        let m = 32;
        let f = chebyshev_f(m);
        let lhs = TruncatedSeries::from_poly(&[lp("1"), lp("0"), lp("-1")], m).mul(&f.pow(2).unwrap());
        let u = families::base_row(&Symbolic, Kind::U, m);
        for (n, un) in u.iter().enumerate() {
            assert_eq!(lhs.coeff(n), &un.scale(&int(n as i64 + 1)), "n = {n}");
        }
    }
}
