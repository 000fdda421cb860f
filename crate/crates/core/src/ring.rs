//! The minimal ring interface the family generators and identity builders
//! are written against, and the two value domains they run in: exact Laurent
//! polynomials in `x`, and exact rationals at a fixed nonzero point.

use std::fmt::Debug;

use num_traits::{One, Zero};

use crate::arith::BigRational;
use crate::laurent::LaurentPoly;

pub trait Ring: Clone + PartialEq + Debug + Send + Sync + Zero + One {
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn scaled(&self, c: &BigRational) -> Self;
}

impl Ring for BigRational {
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn scaled(&self, c: &BigRational) -> Self {
        self * c
    }
}

impl Ring for LaurentPoly {
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn scaled(&self, c: &BigRational) -> Self {
        self.scale(c)
    }
}

/// Where the variable `x` lives.
pub trait Domain: Send + Sync {
    type Value: Ring;

    fn x(&self) -> Self::Value;

    /// `x^k`, `k` possibly negative.
    fn x_pow(&self, k: i64) -> Self::Value;

    /// `v * x^k`.
    fn shift(&self, v: &Self::Value, k: i64) -> Self::Value {
        v.times(&self.x_pow(k))
    }
}

/// Exact symbolic values in `Q[x, 1/x]`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Symbolic;

impl Domain for Symbolic {
    type Value = LaurentPoly;

    fn x(&self) -> LaurentPoly {
        LaurentPoly::x()
    }

    fn x_pow(&self, k: i64) -> LaurentPoly {
        LaurentPoly::monomial(BigRational::one(), k)
    }

    fn shift(&self, v: &LaurentPoly, k: i64) -> LaurentPoly {
        v.shift(k)
    }
}

/// Values at a fixed rational point `x0 != 0`.
#[derive(Debug, Clone)]
pub struct AtPoint {
    x0: BigRational,
    inv: BigRational,
}

impl AtPoint {
    /// `None` when `x0` is zero, since negative powers of `x` appear in every
    /// identity right-hand side.
    pub fn new(x0: BigRational) -> Option<Self> {
        if Zero::is_zero(&x0) {
            return None;
        }
        let inv = x0.recip();
        Some(AtPoint { x0, inv })
    }

    pub fn point(&self) -> &BigRational {
        &self.x0
    }
}

impl Domain for AtPoint {
    type Value = BigRational;

    fn x(&self) -> BigRational {
        self.x0.clone()
    }

    fn x_pow(&self, k: i64) -> BigRational {
        let base = if k < 0 { &self.inv } else { &self.x0 };
        num_traits::pow(base.clone(), k.unsigned_abs() as usize)
    }
}
