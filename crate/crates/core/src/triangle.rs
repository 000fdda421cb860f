//! The coefficient triangle `a_i(N)`, `1 <= i <= N`, of the differential
//! equations
//!
//! ```text
//! 2^N N! F^{N+1} = Σ_{i=1}^{N} a_i(N) (x - t)^{i - 2N} F^{(i)},   F = 1 / (1 - 2tx + t^2)
//! ```
//!
//! where `F^{(i)}` is the `i`-th `t`-derivative. The row recurrence is the
//! definition; the closed forms below are independent cross-checks.

use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::arith::{double_factorial, factorial, falling_factorial, pow2, ratio, BigRational};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::report::{IdentityId, ReportEntry};
use crate::series::{chebyshev_f, TruncatedSeries};

/// Rows `N = 1 ..= n_max`; row `N` holds `[a_1(N), ..., a_N(N)]`.
#[derive(Clone, PartialEq, Eq)]
pub struct Triangle {
    rows: Vec<Vec<BigInt>>,
}

impl Triangle {
    /// Builds rows up to `n_max` (at least one row).
    pub fn new(n_max: usize) -> Self {
        let mut t = Triangle {
            rows: vec![vec![BigInt::one()]],
        };
        t.extend_to(n_max);
        t
    }

    /// Appends rows until `n_max` is covered.
    pub fn extend_to(&mut self, n_max: usize) {
        while self.rows.len() < n_max {
            let n = self.rows.len() as i64;
            let prev = &self.rows[n as usize - 1];
            let mut next = Vec::with_capacity(prev.len() + 1);
            next.push(&prev[0] * (2 * n - 1));
            for i in 2..=n {
                let iu = i as usize;
                next.push(&prev[iu - 2] + &prev[iu - 1] * (2 * n - i));
            }
            next.push(prev[prev.len() - 1].clone());
            self.rows.push(next);
        }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len()
    }

    /// Row `N`, 1-based.
    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n - 1]
    }

    /// `a_i(N)`, both 1-based.
    pub fn get(&self, i: usize, n: usize) -> &BigInt {
        &self.rows[n - 1][i - 1]
    }

    /// `(N, row)` pairs in increasing `N`.
    pub fn rows(&self) -> impl Iterator<Item = (usize, &[BigInt])> {
        self.rows.iter().enumerate().map(|(k, r)| (k + 1, r.as_slice()))
    }
}

impl fmt::Debug for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.rows()).finish()
    }
}

/// Row-by-row construction from `a_1(1) = 1`.
pub fn triangle_recurrence(n_max: usize) -> Result<Triangle> {
    if n_max == 0 {
        return Err(Error::InvalidOrder(0));
    }
    Ok(Triangle::new(n_max))
}

/// `a_1(N) = (2N - 3)!!`.
pub fn a1_closed(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    double_factorial(2 * n as i64 - 3)
}

/// `a_i(N)` for `2 <= i <= N` from the nested-sum closed form
///
/// ```text
/// Σ_{k_{i-1}} ... Σ_{k_1} 2^{Σk} Π_{j=2}^{i} (N - Σ_{l=j}^{i-1} k_l - (2i + 2 - j)/2)_{k_{j-1}}
///                         · (2(N - i - Σk) - 1)!!
/// ```
///
/// with every partial sum `Σk <= N - i`.
pub fn a_closed(i: usize, n: usize) -> Result<BigInt> {
    if i < 2 || i > n {
        return Err(Error::TriangleIndex {
            i: i as i64,
            n: n as i64,
        });
    }
    let value = nested_sum(i as i64, n as i64, i as i64, 0, BigRational::one())?;
    if !value.is_integer() || !value.is_positive() {
        return Err(Error::ClosedFormNotPositiveInteger {
            i: i as i64,
            n: n as i64,
            value: value.to_string(),
        });
    }
    Ok(value.to_integer())
}

/// Level `j` chooses `k_{j-1}`; `used` is `k_{i-1} + ... + k_j`.
fn nested_sum(i: i64, n: i64, j: i64, used: i64, acc: BigRational) -> Result<BigRational> {
    if j < 2 {
        let tail = BigRational::from_integer(pow2(used as u64) * double_factorial(2 * (n - i - used) - 1)?);
        return Ok(acc * tail);
    }
    let base = ratio(2 * (n - used) - (2 * i + 2 - j), 2);
    let mut total = BigRational::from_integer(0.into());
    for k in 0..=(n - i - used) {
        let factor = falling_factorial(&base, k as u64);
        total += nested_sum(i, n, j - 1, used + k, &acc * factor)?;
    }
    Ok(total)
}

/// `a_i(N + 1)` from row values with smaller `N` through the one-step unrolled
/// recurrence `Σ_{k=0}^{N+1-i} 2^k (N - i/2)_k a_{i-1}(N - k)`, for
/// `2 <= i <= N + 1`. Needs `triangle.n_max() >= N`.
pub fn one_step_expansion(triangle: &Triangle, i: usize, n: usize) -> BigRational {
    let base = ratio(2 * n as i64 - i as i64, 2);
    (0..=(n + 1 - i))
        .map(|k| {
            BigRational::from_integer(pow2(k as u64) * triangle.get(i - 1, n - k))
                * falling_factorial(&base, k as u64)
        })
        .sum()
}

/// Checks `2^N N! (x - t)^{2N} F^{N+1} = Σ a_i(N) (x - t)^i F^{(i)}` as truncated
/// series, coefficientwise up to `t^{order - N}`. Multiplying through by
/// `(x - t)^{2N}` keeps both sides polynomial in `1 / (x - t)`.
pub fn verify_defining_relation(triangle: &Triangle, n: usize, order: usize) -> Result<ReportEntry> {
    if n == 0 || n > triangle.n_max() {
        return Err(Error::TriangleIndex {
            i: n as i64,
            n: triangle.n_max() as i64,
        });
    }
    if order < n {
        return Err(Error::InvalidOrder(order as i64));
    }
    let start = Instant::now();
    let f = chebyshev_f(order);
    let x_minus_t = TruncatedSeries::x_minus_t(order);
    let scale = LaurentPoly::constant(BigRational::from_integer(pow2(n as u64) * factorial(n as u64)));

    let lhs = x_minus_t
        .pow(2 * n as u32)?
        .mul(&f.pow(n as u32 + 1)?)
        .scale(&scale);

    let mut rhs = TruncatedSeries::zero(order - n);
    let mut deriv = f.clone();
    for i in 1..=n {
        deriv = deriv.derivative_t()?;
        let a = LaurentPoly::constant(BigRational::from_integer(triangle.get(i, n).clone()));
        let term = x_minus_t.pow(i as u32)?.mul(&deriv).scale(&a);
        rhs = rhs.add(&term);
    }

    let residual = lhs.truncate(order - n).first_difference(&rhs);
    Ok(ReportEntry {
        identity: IdentityId::DefiningRelation,
        n: order,
        big_n: n,
        pass: residual.is_zero() && lhs.agrees_to(&rhs, order - n),
        residual,
        rhs_polynomial: None,
        elapsed: start.elapsed(),
    })
}
