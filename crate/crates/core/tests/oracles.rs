//! Cross-checks against textbook closed forms written out independently of
//! the library's recurrences and series code.

use cheb_identities::{family_poly, FamilySpec, FamilyTable, Kind, LaurentPoly, Triangle};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn fact(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn choose(n: u64, k: u64) -> BigInt {
    fact(n) / (fact(k) * fact(n - k))
}

/// `(a)^(m) = a (a + 1) ... (a + m - 1)`.
fn rising(a: &BigRational, m: u64) -> BigRational {
    (0..m).fold(BigRational::one(), |acc, j| acc * (a + q(j as i64)))
}

/// Gegenbauer `C_n^(λ)(x) = Σ_k (-1)^k (λ)^(n-k) / (k! (n-2k)!) (2x)^(n-2k)`.
fn gegenbauer(lambda: &BigRational, n: usize) -> LaurentPoly {
    let n = n as u64;
    LaurentPoly::from_terms((0..=n / 2).map(|k| {
        let sign = if k % 2 == 0 { q(1) } else { q(-1) };
        let denom = BigRational::from_integer(fact(k) * fact(n - 2 * k));
        let two_pow = BigRational::from_integer(BigInt::one() << (n - 2 * k));
        ((n - 2 * k) as i64, sign * rising(lambda, n - k) / denom * two_pow)
    }))
}

fn gegenbauer_or_zero(lambda: &BigRational, n: i64) -> LaurentPoly {
    if n < 0 {
        LaurentPoly::zero()
    } else {
        gegenbauer(lambda, n as usize)
    }
}

#[test]
fn second_kind_explicit_sum() {
    // U_n = Σ_k (-1)^k C(n-k, k) (2x)^(n-2k)
    for n in 0..=30u64 {
        let expected = LaurentPoly::from_terms((0..=n / 2).map(|k| {
            let c = choose(n - k, k) << (n - 2 * k);
            let c = if k % 2 == 0 { c } else { -c };
            ((n - 2 * k) as i64, BigRational::from_integer(c))
        }));
        assert_eq!(family_poly(FamilySpec::base(Kind::U), n as usize), expected, "U_{n}");
    }
}

#[test]
fn legendre_explicit_sum() {
    // P_n = 2^-n Σ_k (-1)^k C(n, k) C(2n-2k, n) x^(n-2k)
    for n in 0..=30u64 {
        let scale = BigRational::new(BigInt::one(), BigInt::one() << n);
        let expected = LaurentPoly::from_terms((0..=n / 2).map(|k| {
            let c = choose(n, k) * choose(2 * n - 2 * k, n);
            let c = if k % 2 == 0 { c } else { -c };
            ((n - 2 * k) as i64, BigRational::from_integer(c) * &scale)
        }));
        assert_eq!(family_poly(FamilySpec::base(Kind::Legendre), n as usize), expected, "P_{n}");
    }
}

/// Coefficient of `t^n` in `(1 + sign·t^step)^α · Σ_m C_m^(α) t^m`. With
/// `sign = 0` the numerator is 1.
fn binomial_mix(alpha: u32, step: i64, sign: i64, n: i64) -> LaurentPoly {
    let lam = q(alpha as i64);
    (0..=alpha as i64)
        .map(|j| {
            let c = BigRational::from_integer(choose(alpha as u64, j as u64) * sign.pow(j as u32));
            gegenbauer_or_zero(&lam, n - step * j).scale(&c)
        })
        .sum()
}

#[test]
fn higher_orders_are_gegenbauer() {
    let table = FamilyTable::default();
    for alpha in 1..=5u32 {
        let half = BigRational::new(alpha.into(), 2.into());
        let row = |kind| table.row(FamilySpec::new(kind, alpha).unwrap(), 20);
        let (u, v, w, tgf, p) = (row(Kind::U), row(Kind::V), row(Kind::W), row(Kind::TGf), row(Kind::Legendre));
        for n in 0..=20i64 {
            let i = n as usize;
            assert_eq!(u[i], binomial_mix(alpha, 1, 0, n), "U^({alpha})_{n}");
            assert_eq!(v[i], binomial_mix(alpha, 1, -1, n), "V^({alpha})_{n}");
            assert_eq!(w[i], binomial_mix(alpha, 1, 1, n), "W^({alpha})_{n}");
            assert_eq!(tgf[i], binomial_mix(alpha, 2, -1, n), "Tgf^({alpha})_{n}");
            assert_eq!(p[i], gegenbauer(&half, i), "P^({alpha})_{n}");
        }
    }
}

#[test]
fn classical_first_kind_is_cosine() {
    for n in 0..=20usize {
        let t = family_poly(FamilySpec::base(Kind::TClassical), n);
        for step in 1..16 {
            let theta = step as f64 * 0.19;
            let x = theta.cos();
            let value: f64 = t
                .terms()
                .map(|(e, c)| c.to_f64().unwrap() * x.powi(e as i32))
                .sum();
            assert!((value - (n as f64 * theta).cos()).abs() < 1e-9, "T_{n}({x})");
        }
    }
}

#[test]
fn triangle_rows_are_reverse_bessel_numbers() {
    // a_i(N) = (2N - i - 1)! / (2^(N-i) (i - 1)! (N - i)!)
    let t = Triangle::new(40);
    for n in 1..=40u64 {
        for i in 1..=n {
            let num = fact(2 * n - i - 1);
            let den = (BigInt::one() << (n - i)) * fact(i - 1) * fact(n - i);
            assert!((&num % &den).is_zero());
            assert_eq!(t.get(i as usize, n as usize), &(num / den), "a_{i}({n})");
        }
    }
}
