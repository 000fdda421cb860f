//! The Chebyshev families of all four kinds, Legendre polynomials, and their
//! higher orders (coefficients of integer powers of the generating
//! functions).
//!
//! The first kind comes in two normalizations. [`Kind::TClassical`] is the
//! usual `T_n` with `T_n(cos θ) = cos nθ`. [`Kind::TGf`] is the coefficient
//! sequence of `(1 - t^2) / (1 - 2xt + t^2)`, which equals `2 T_n` for
//! `n >= 1`; every convolution identity over `1 / (1 - 2xt + t^2)` needs
//! this one.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

use num_traits::One;

use crate::arith::{binomial_q, int, ratio};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::ring::{Domain, Ring, Symbolic};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    TClassical,
    TGf,
    U,
    V,
    W,
    Legendre,
}

impl Kind {
    pub const ALL: [Kind; 6] = [
        Kind::TClassical,
        Kind::TGf,
        Kind::U,
        Kind::V,
        Kind::W,
        Kind::Legendre,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::TClassical => "T",
            Kind::TGf => "Tgf",
            Kind::U => "U",
            Kind::V => "V",
            Kind::W => "W",
            Kind::Legendre => "P",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "T" | "t" | "T-classical" | "T_classical" => Kind::TClassical,
            "Tgf" | "tgf" | "T-gf" | "T_gf" => Kind::TGf,
            "U" | "u" => Kind::U,
            "V" | "v" => Kind::V,
            "W" | "w" => Kind::W,
            "P" | "p" | "legendre" | "Legendre" => Kind::Legendre,
            _ => return Err(format!("unknown family '{s}' (expected T, Tgf, U, V, W or P)")),
        })
    }
}

/// A family together with its order `alpha >= 1` (1 is the base family).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilySpec {
    kind: Kind,
    order: u32,
}

impl FamilySpec {
    pub fn new(kind: Kind, order: u32) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidOrder(0));
        }
        if kind == Kind::TClassical && order > 1 {
            return Err(Error::ClassicalHigherOrder(order));
        }
        Ok(FamilySpec { kind, order })
    }

    pub fn base(kind: Kind) -> Self {
        FamilySpec { kind, order: 1 }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn order(&self) -> u32 {
        self.order
    }
}

/// Base family members `P_0 ..= P_n_max` by three-term recurrence.
pub fn base_row<D: Domain>(domain: &D, kind: Kind, n_max: usize) -> Vec<D::Value> {
    let x = domain.x();
    let one = D::Value::one();
    let two_x = x.scaled(&int(2));
    let len = n_max + 1;

    let chebyshev = |seed1: D::Value| {
        let mut row = vec![one.clone(), seed1];
        while row.len() < len {
            let k = row.len();
            row.push(two_x.times(&row[k - 1]).minus(&row[k - 2]));
        }
        row.truncate(len);
        row
    };

    match kind {
        Kind::TClassical => chebyshev(x.clone()),
        Kind::U => chebyshev(two_x.clone()),
        Kind::V => chebyshev(two_x.minus(&one)),
        Kind::W => chebyshev(two_x.plus(&one)),
        Kind::TGf => {
            let u = chebyshev(two_x.clone());
            (0..len)
                .map(|n| if n < 2 { u[n].clone() } else { u[n].minus(&u[n - 2]) })
                .collect()
        }
        Kind::Legendre => {
            let mut row = vec![one.clone(), x.clone()];
            while row.len() < len {
                let n = row.len() as i64 - 1;
                let next = x
                    .times(&row[n as usize])
                    .scaled(&int(2 * n + 1))
                    .minus(&row[n as usize - 1].scaled(&int(n)))
                    .scaled(&ratio(1, n + 1));
                row.push(next);
            }
            row.truncate(len);
            row
        }
    }
}

/// Truncated Cauchy product of two coefficient sequences, `len` terms.
pub fn convolve<R: Ring>(a: &[R], b: &[R], len: usize) -> Vec<R> {
    (0..len)
        .map(|n| {
            let mut acc = R::zero();
            for l in 0..=n {
                if l < a.len() && n - l < b.len() {
                    acc = acc.plus(&a[l].times(&b[n - l]));
                }
            }
            acc
        })
        .collect()
}

/// `alpha`-fold self-convolution, keeping `base.len()` terms.
pub fn convolution_power<R: Ring>(base: &[R], alpha: u32) -> Vec<R> {
    let mut acc = base.to_vec();
    for _ in 1..alpha {
        acc = convolve(&acc, base, base.len());
    }
    acc
}

type Row<V> = Arc<Vec<V>>;

/// Memoized family rows in a given domain. Rows only ever grow; a returned
/// row is an immutable snapshot and safe to share across threads.
pub struct FamilyTable<D: Domain> {
    domain: D,
    rows: RwLock<HashMap<FamilySpec, Row<D::Value>>>,
}

impl<D: Domain> FamilyTable<D> {
    pub fn new(domain: D) -> Self {
        FamilyTable {
            domain,
            rows: RwLock::new(HashMap::new()),
        }
    }

    pub fn domain(&self) -> &D {
        &self.domain
    }

    /// Members `0 ..= n_max` (at least) of the given family.
    pub fn row(&self, spec: FamilySpec, n_max: usize) -> Row<D::Value> {
        if let Some(row) = self.rows.read().expect("poisoned").get(&spec) {
            if row.len() > n_max {
                return Arc::clone(row);
            }
        }
        let row = Arc::new(if spec.order == 1 {
            base_row(&self.domain, spec.kind, n_max)
        } else {
            let base = self.row(FamilySpec::base(spec.kind), n_max);
            convolution_power(&base[..=n_max], spec.order)
        });
        let mut rows = self.rows.write().expect("poisoned");
        let slot = rows.entry(spec).or_insert_with(|| Arc::clone(&row));
        if slot.len() < row.len() {
            *slot = Arc::clone(&row);
        }
        row
    }

    pub fn get(&self, spec: FamilySpec, n: usize) -> D::Value {
        self.row(spec, n)[n].clone()
    }
}

impl Default for FamilyTable<Symbolic> {
    fn default() -> Self {
        FamilyTable::new(Symbolic)
    }
}

/// The degree-`n` member of a family as an exact polynomial.
pub fn family_poly(spec: FamilySpec, n: usize) -> LaurentPoly {
    FamilyTable::new(Symbolic).get(spec, n)
}

/// First-kind `T_n` from the binomial sum
/// `Σ_{m <= n/2} C(n, 2m) x^{n-2m} (x^2 - 1)^m`.
pub fn explicit_t(n: usize) -> LaurentPoly {
    let x2_minus_1: LaurentPoly = LaurentPoly::from_coeffs([-1, 0, 1]);
    let n = n as i64;
    (0..=n / 2)
        .map(|m| {
            let c = binomial_q(n, 2 * m).expect("0 <= 2m <= n");
            x2_minus_1.pow(m as u32).shift(n - 2 * m).scale(&c)
        })
        .sum()
}

/// The two Chebyshev differential equations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ode {
    /// `(1 - x^2) y'' - x y' + n^2 y = 0`, solved by `T_n`.
    FirstKind,
    /// `(1 - x^2) y'' - 3x y' + n(n + 2) y = 0`, solved by `U_n`.
    SecondKind,
}

/// Substitutes the matching family member into its differential equation.
pub fn ode_residual(ode: Ode, n: usize) -> LaurentPoly {
    let (kind, slope, eigen) = match ode {
        Ode::FirstKind => (Kind::TClassical, 1, (n * n) as i64),
        Ode::SecondKind => (Kind::U, 3, (n * (n + 2)) as i64),
    };
    let y = family_poly(FamilySpec::base(kind), n);
    let dy = y.derivative();
    let ddy = dy.derivative();
    let one_minus_x2 = LaurentPoly::from_coeffs([1, 0, -1]);
    &one_minus_x2 * &ddy - dy.shift(1).scale(&int(slope)) + y.scale(&int(eigen))
}
