//! Exact scalars and the combinatorial primitives used by every coefficient
//! formula: binomials, odd double factorials and rational falling factorials.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use num_rational::BigRational;

use crate::error::{Error, Result};

/// Builds an integer-valued rational.
pub fn int<T: Into<BigInt>>(n: T) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Builds `num/den` in lowest terms. Panics if `den == 0`.
pub fn ratio<N: Into<BigInt>, D: Into<BigInt>>(num: N, den: D) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// `C(top, k)`, zero when `k > top`.
pub fn binomial(top: i64, k: i64) -> Result<BigInt> {
    if top < 0 {
        return Err(Error::NegativeBinomialTop(top));
    }
    if k < 0 {
        return Err(Error::NegativeArgument("binomial lower index", k));
    }
    if k > top {
        return Ok(BigInt::zero());
    }
    let k = k.min(top - k);
    let mut acc = BigInt::one();
    // acc stays integral: after step j it equals C(top - k + j, j)
    for j in 1..=k {
        acc *= top - k + j;
        acc /= j;
    }
    Ok(acc)
}

/// Same as [`binomial`], lifted to a rational.
pub fn binomial_q(top: i64, k: i64) -> Result<BigRational> {
    binomial(top, k).map(BigRational::from_integer)
}

/// `m!!` for odd `m >= -1`, with `(-1)!! = 1`.
pub fn double_factorial(m: i64) -> Result<BigInt> {
    if m < -1 || m % 2 == 0 {
        return Err(Error::InvalidDoubleFactorial(m));
    }
    let mut acc = BigInt::one();
    let mut j = m;
    while j > 1 {
        acc *= j;
        j -= 2;
    }
    Ok(acc)
}

/// `n!`.
pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, j| acc * j)
}

/// Falling factorial `(x)_k = x (x - 1) ... (x - k + 1)`, `(x)_0 = 1`.
pub fn falling_factorial(x: &BigRational, k: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut term = x.clone();
    let one = BigRational::one();
    for _ in 0..k {
        acc *= &term;
        term -= &one;
    }
    acc
}

/// `(x)_k` for an integer base, kept in the integers.
pub fn falling_factorial_int(x: i64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..k as i64 {
        acc *= x - j;
    }
    acc
}

/// `2^k`.
pub fn pow2(k: u64) -> BigInt {
    BigInt::one() << k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(4, 2).unwrap(), BigInt::from(6));
        assert_eq!(binomial(9, 0).unwrap(), BigInt::from(1));
        assert_eq!(binomial(0, 0).unwrap(), BigInt::from(1));
        assert_eq!(binomial(3, 5).unwrap(), BigInt::from(0));
        assert_eq!(binomial(60, 30).unwrap().to_string(), "118264581564861424");
    }

    #[test]
    fn binomial_rejects_negative_top() {
        assert!(matches!(binomial(-1, 0), Err(Error::NegativeBinomialTop(-1))));
        assert!(binomial(3, -1).is_err());
    }

    #[test]
    fn pascal_rule() {
        for a in 1..40 {
            for k in 1..=a {
                assert_eq!(
                    binomial(a, k).unwrap(),
                    binomial(a - 1, k - 1).unwrap() + binomial(a - 1, k).unwrap()
                );
            }
        }
    }

    #[test]
    fn double_factorial_values() {
        assert_eq!(double_factorial(-1).unwrap(), BigInt::from(1));
        assert_eq!(double_factorial(1).unwrap(), BigInt::from(1));
        assert_eq!(double_factorial(5).unwrap(), BigInt::from(5 * 3));
        assert_eq!(double_factorial(7).unwrap(), BigInt::from(7 * 5 * 3));
        assert_eq!(
            double_factorial(23).unwrap(),
            (1..=23i64).step_by(2).map(BigInt::from).product::<BigInt>()
        );
    }

    #[test]
    fn double_factorial_rejects_even_and_small() {
        assert!(double_factorial(4).is_err());
        assert!(double_factorial(0).is_err());
        assert!(double_factorial(-3).is_err());
    }

    #[test]
    fn even_factorial_splits() {
        for n in 1..=30u64 {
            let lhs = factorial(2 * n);
            let rhs = double_factorial(2 * n as i64 - 1).unwrap() * pow2(n) * factorial(n);
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn falling_factorial_values() {
        assert_eq!(falling_factorial(&ratio(-7, 3), 0), int(1));
        assert_eq!(falling_factorial(&ratio(5, 2), 2), ratio(15, 4));
        assert_eq!(falling_factorial(&int(3), 3), int(6));
        assert_eq!(falling_factorial(&int(3), 4), int(0));
        assert_eq!(falling_factorial_int(5, 2), BigInt::from(20));
    }

    #[test]
    fn falling_factorial_splits() {
        let bases = [ratio(5, 2), ratio(-1, 3), int(7), ratio(11, 4), int(0)];
        for x in &bases {
            for j in 0..=10u64 {
                for k in 0..=10u64 {
                    let shifted = x - int(j as i64);
                    assert_eq!(
                        falling_factorial(x, j + k),
                        falling_factorial(x, j) * falling_factorial(&shifted, k)
                    );
                }
            }
        }
    }
}
