//! Builds both sides of every convolution identity and certifies equality on
//! a finite `(n, N)` grid.
//!
//! Sides are assembled generically over a [`Domain`]: symbolically in
//! `Q[x, 1/x]`, where a zero residual is an exact certificate, or at rational
//! points, which is a cheaper screen. Right-hand sides are collected as
//! `Σ c · P_q(x) · x^e` with the scalar weights `c` merged per `(q, e)`
//! before any polynomial is touched.

use std::collections::BTreeMap;
use std::sync::{Arc, RwLock};
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::{binomial, factorial, falling_factorial_int, int, pow2, ratio, BigRational};
use crate::error::Result;
use crate::families::{convolution_power, convolve, FamilySpec, FamilyTable, Kind};
use crate::laurent::LaurentPoly;
use crate::report::{IdentityId, ReportEntry, VerificationReport};
use crate::ring::{AtPoint, Domain, Ring, Symbolic};
use crate::triangle::{verify_defining_relation, Triangle};

/// Which first-kind normalization enters the identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FirstKind {
    /// Coefficients of `(1 - t^2) / (1 - 2xt + t^2)`.
    #[default]
    Gf,
    /// `T_n(cos θ) = cos nθ`. Wrong for these identities; kept so the failure
    /// can be demonstrated.
    Classical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Symbolic,
    /// Exact evaluation at `points` pseudo-random rationals in `[-2, 2] \ {0}`.
    Numeric { points: usize, seed: u64 },
}

impl Mode {
    pub const DEFAULT_NUMERIC: Mode = Mode::Numeric {
        points: 20,
        seed: 0x5eed_c4eb,
    };
}

/// Cells to run: `n = 0 ..= n_max`, and `N = 1 ..= big_n_max` for the
/// identities indexed by `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    pub identities: Vec<IdentityId>,
    pub n_max: usize,
    pub big_n_max: usize,
}

impl Grid {
    pub fn new(identities: impl IntoIterator<Item = IdentityId>, n_max: usize, big_n_max: usize) -> Self {
        Grid {
            identities: identities.into_iter().collect(),
            n_max,
            big_n_max,
        }
    }

    pub fn all(n_max: usize, big_n_max: usize) -> Self {
        Grid::new(IdentityId::ALL, n_max, big_n_max)
    }

    /// `(identity, n, N)` triples. Defining-relation cells put the series
    /// order `n_max` in the `n` slot and need `n_max >= N`.
    pub fn cells(&self) -> Vec<(IdentityId, usize, usize)> {
        let mut out = Vec::new();
        for &id in &self.identities {
            match id {
                IdentityId::DefiningRelation => {
                    for big_n in 1..=self.big_n_max.min(self.n_max) {
                        out.push((id, self.n_max, big_n));
                    }
                }
                _ if id.uses_big_n() => {
                    for big_n in 1..=self.big_n_max {
                        for n in 0..=self.n_max {
                            out.push((id, n, big_n));
                        }
                    }
                }
                _ => out.extend((0..=self.n_max).map(|n| (id, n, 0))),
            }
        }
        out
    }
}

/// Ordered triples `(m, s, p)` of nonnegative integers with `m + s + p = n`.
pub fn compositions3(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..=n).flat_map(move |m| (0..=n - m).map(move |s| (m, s, n - m - s)))
}

/// Both sides of one identity instance.
#[derive(Debug, Clone, PartialEq)]
pub struct Sides<V> {
    pub lhs: V,
    pub rhs: V,
}

/// Scalar weights of `P_q(x) · x^e`, keyed by `(q, e)`.
#[derive(Default)]
struct WeightedTerms {
    weights: BTreeMap<(usize, i64), BigRational>,
}

impl WeightedTerms {
    fn add(&mut self, index: usize, exp: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.weights.entry((index, exp)).or_insert_with(BigRational::zero);
        *slot += c;
    }

    fn max_index(&self) -> usize {
        self.weights.keys().map(|&(q, _)| q).max().unwrap_or(0)
    }

    fn build<D: Domain>(&self, domain: &D, row: &[D::Value]) -> D::Value {
        self.weights
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .fold(D::Value::zero(), |acc, (&(q, e), c)| {
                acc.plus(&domain.shift(&row[q], e).scaled(c))
            })
    }
}

fn q(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

fn binom(top: usize, k: usize) -> BigRational {
    q(binomial(top as i64, k as i64).expect("nonnegative top"))
}

fn sign(k: usize) -> BigRational {
    if k.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

/// `1 / (2^N N!)`.
fn normalizer(big_n: usize) -> BigRational {
    q(pow2(big_n as u64) * factorial(big_n as u64)).recip()
}

/// Shared state for one value domain: cached family rows and the triangle.
pub struct Context<D: Domain> {
    families: FamilyTable<D>,
    triangle: RwLock<Triangle>,
    first_kind: FirstKind,
}

impl<D: Domain> Context<D> {
    pub fn new(domain: D, first_kind: FirstKind) -> Self {
        Context {
            families: FamilyTable::new(domain),
            triangle: RwLock::new(Triangle::new(1)),
            first_kind,
        }
    }

    pub fn families(&self) -> &FamilyTable<D> {
        &self.families
    }

    fn domain(&self) -> &D {
        self.families.domain()
    }

    fn row(&self, kind: Kind, order: u32, n_max: usize) -> Arc<Vec<D::Value>> {
        let spec = FamilySpec::new(kind, order).expect("valid family spec");
        self.families.row(spec, n_max)
    }

    fn first_kind_row(&self, order: u32, n_max: usize) -> Arc<Vec<D::Value>> {
        match self.first_kind {
            FirstKind::Gf => self.row(Kind::TGf, order, n_max),
            FirstKind::Classical => {
                let base = self.row(Kind::TClassical, 1, n_max);
                if order == 1 {
                    base
                } else {
                    Arc::new(convolution_power(&base[..=n_max], order))
                }
            }
        }
    }

    /// `a_1(N) ..= a_N(N)` as rationals.
    fn triangle_row(&self, big_n: usize) -> Vec<BigRational> {
        {
            let t = self.triangle.read().expect("poisoned");
            if t.n_max() >= big_n {
                return t.row(big_n).iter().cloned().map(q).collect();
            }
        }
        let mut t = self.triangle.write().expect("poisoned");
        t.extend_to(big_n);
        t.row(big_n).iter().cloned().map(q).collect()
    }

    /// Builds both sides of an identity instance. `big_n` is `α` for
    /// [`IdentityId::UalphaFromLegendre`] and ignored by the identities
    /// without an `N` index.
    ///
    /// # Panics
    /// On [`IdentityId::DefiningRelation`], which is a series identity, or on
    /// `big_n == 0` for an `N`-indexed identity.
    pub fn sides(&self, id: IdentityId, n: usize, big_n: usize) -> Sides<D::Value> {
        assert!(
            !id.uses_big_n() || big_n >= 1,
            "{id} needs N >= 1, got {big_n}"
        );
        match id {
            IdentityId::IntroUFromT => self.intro_u_from_t(n),
            IdentityId::UFromLegendre => self.u_from_legendre(n, 1),
            IdentityId::UalphaFromLegendre => self.u_from_legendre(n, big_n as u32),
            IdentityId::Thm2 => self.thm2(n, big_n),
            IdentityId::Cor3 => self.cor3(n, big_n),
            IdentityId::Cor4Reconstructed => self.cor4_reconstructed(n, big_n),
            IdentityId::Thm5 => self.thm5(n, big_n),
            IdentityId::Thm6 => self.thm6(n, big_n),
            IdentityId::Thm7 => self.thm7(n, big_n),
            IdentityId::DefiningRelation => {
                panic!("the defining relation is checked as a series, not pointwise")
            }
        }
    }

    /// `(n + 1) U_n` against `Σ_l T̃_l U_{n-l}`.
    fn intro_u_from_t(&self, n: usize) -> Sides<D::Value> {
        let u = self.row(Kind::U, 1, n);
        let t = self.first_kind_row(1, n);
        Sides {
            lhs: u[n].scaled(&int(n as i64 + 1)),
            rhs: convolve(&t[..=n], &u[..=n], n + 1).pop().expect("n + 1 terms"),
        }
    }

    /// `U_n^(α)` against `Σ_l p_l^(α) p_{n-l}^(α)`.
    fn u_from_legendre(&self, n: usize, alpha: u32) -> Sides<D::Value> {
        let p = self.row(Kind::Legendre, alpha, n);
        Sides {
            lhs: self.row(Kind::U, alpha, n)[n].clone(),
            rhs: convolve(&p[..=n], &p[..=n], n + 1).pop().expect("n + 1 terms"),
        }
    }

    /// `Σ_i a_i(N) Σ_l C(2N+n-l-i-1, n-l) (l+i)_i x^{i+l-2N-n} P_{l+i} / (2^N N!)`
    /// as weights on `P_q x^e`.
    fn thm2_weights(&self, n: usize, big_n: usize) -> WeightedTerms {
        let a = self.triangle_row(big_n);
        let norm = normalizer(big_n);
        let mut terms = WeightedTerms::default();
        for i in 1..=big_n {
            let ai = &a[i - 1] * &norm;
            for l in 0..=n {
                let c = &ai
                    * binom(2 * big_n + n - l - i - 1, n - l)
                    * q(falling_factorial_int((l + i) as i64, i as u64));
                let e = (i + l) as i64 - (2 * big_n + n) as i64;
                terms.add(l + i, e, c);
            }
        }
        terms
    }

    fn thm2(&self, n: usize, big_n: usize) -> Sides<D::Value> {
        let terms = self.thm2_weights(n, big_n);
        let u = self.row(Kind::U, 1, terms.max_index());
        Sides {
            lhs: self.row(Kind::U, big_n as u32 + 1, n)[n].clone(),
            rhs: terms.build(self.domain(), &u),
        }
    }

    fn cor3(&self, n: usize, big_n: usize) -> Sides<D::Value> {
        let terms = self.thm2_weights(n, big_n);
        let u = self.row(Kind::U, 1, terms.max_index());
        let p = self.row(Kind::Legendre, big_n as u32 + 1, n);
        Sides {
            lhs: convolve(&p[..=n], &p[..=n], n + 1).pop().expect("n + 1 terms"),
            rhs: terms.build(self.domain(), &u),
        }
    }

    /// The `thm2` right-hand side with every `U_{l+i}` written as `Σ_j p_j p_{l+i-j}`.
    fn cor4_reconstructed(&self, n: usize, big_n: usize) -> Sides<D::Value> {
        let terms = self.thm2_weights(n, big_n);
        let top = terms.max_index();
        let p = self.row(Kind::Legendre, 1, top);
        let p_squared = convolve(&p[..=top], &p[..=top], top + 1);
        Sides {
            lhs: self.row(Kind::U, big_n as u32 + 1, n)[n].clone(),
            rhs: terms.build(self.domain(), &p_squared),
        }
    }

    /// The common triple sum of the third-, fourth- and first-kind identities:
    /// weights `a_i(N) (i!/l!) C(2N+m-i-1, m) C(i-l+s, s) (p+l)_l` on
    /// `P_{p+l} x^{i-2N-m}`, times `sign(i, l, s)`.
    fn leibniz_weights(
        &self,
        n: usize,
        big_n: usize,
        scale: &BigRational,
        sign_of: impl Fn(usize, usize, usize) -> BigRational,
        terms: &mut WeightedTerms,
    ) {
        let a = self.triangle_row(big_n);
        for i in 1..=big_n {
            let i_fact = q(factorial(i as u64));
            for l in 0..=i {
                let base = &a[i - 1] * &i_fact / q(factorial(l as u64)) * scale;
                for (m, s, p) in compositions3(n) {
                    let c = &base
                        * binom(2 * big_n + m - i - 1, m)
                        * binom(i - l + s, s)
                        * q(falling_factorial_int((p + l) as i64, l as u64))
                        * sign_of(i, l, s);
                    terms.add(p + l, i as i64 - (2 * big_n + m) as i64, c);
                }
            }
        }
    }

    /// `Σ_l C(N+n-l, n-l) V_l^(N+1)` against the Leibniz expansion through
    /// `1 / (1 - t)`.
    fn thm5(&self, n: usize, big_n: usize) -> Sides<D::Value> {
        let v_high = self.row(Kind::V, big_n as u32 + 1, n);
        let lhs = (0..=n).fold(D::Value::zero(), |acc, l| {
            acc.plus(&v_high[l].scaled(&binom(big_n + n - l, n - l)))
        });
        let mut terms = WeightedTerms::default();
        self.leibniz_weights(n, big_n, &normalizer(big_n), |_, _, _| int(1), &mut terms);
        let v = self.row(Kind::V, 1, terms.max_index());
        Sides {
            lhs,
            rhs: terms.build(self.domain(), &v),
        }
    }

    /// `Σ_l (-1)^{n-l} C(N+n-l, n-l) W_l^(N+1)` against the Leibniz expansion
    /// through `1 / (1 + t)`.
    fn thm6(&self, n: usize, big_n: usize) -> Sides<D::Value> {
        let w_high = self.row(Kind::W, big_n as u32 + 1, n);
        let lhs = (0..=n).fold(D::Value::zero(), |acc, l| {
            acc.plus(&w_high[l].scaled(&(binom(big_n + n - l, n - l) * sign(n - l))))
        });
        let mut terms = WeightedTerms::default();
        self.leibniz_weights(
            n,
            big_n,
            &normalizer(big_n),
            |i, l, s| sign(i - l) * sign(s),
            &mut terms,
        );
        let w = self.row(Kind::W, 1, terms.max_index());
        Sides {
            lhs,
            rhs: terms.build(self.domain(), &w),
        }
    }

    /// `2^{N+1} N! Σ_{s+m+p=n} C(N+s, s) C(m+N, m) (-1)^m T̃_p^(N+1)` against the
    /// sum of the `1 / (1 - t)` and `1 / (1 + t)` Leibniz expansions.
    fn thm7(&self, n: usize, big_n: usize) -> Sides<D::Value> {
        let t_high = self.first_kind_row(big_n as u32 + 1, n);
        let lead = q(pow2(big_n as u64 + 1) * factorial(big_n as u64));
        let lhs = compositions3(n).fold(D::Value::zero(), |acc, (s, m, p)| {
            let c = &lead * binom(big_n + s, s) * binom(m + big_n, m) * sign(m);
            acc.plus(&t_high[p].scaled(&c))
        });
        let mut terms = WeightedTerms::default();
        let one = int(1);
        self.leibniz_weights(n, big_n, &one, |_, _, _| int(1), &mut terms);
        self.leibniz_weights(n, big_n, &one, |i, l, s| sign(i - l) * sign(s), &mut terms);
        let t = self.first_kind_row(1, terms.max_index());
        Sides {
            lhs,
            rhs: terms.build(self.domain(), &t),
        }
    }
}

/// Whether the right-hand side of an identity carries explicit negative
/// powers of `x` that must cancel.
fn has_negative_powers(id: IdentityId) -> bool {
    matches!(
        id,
        IdentityId::Thm2
            | IdentityId::Cor3
            | IdentityId::Cor4Reconstructed
            | IdentityId::Thm5
            | IdentityId::Thm6
            | IdentityId::Thm7
    )
}

/// `count` distinct nonzero rationals `p/q` in `[-2, 2]` with `q <= 16`,
/// reproducible from `seed`.
pub fn sample_points(count: usize, seed: u64) -> Vec<BigRational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<BigRational> = Vec::with_capacity(count);
    while out.len() < count {
        let den: i64 = rng.gen_range(1..=16);
        let num: i64 = rng.gen_range(-2 * den..=2 * den);
        if num == 0 {
            continue;
        }
        let x0 = ratio(num, den);
        if !out.contains(&x0) {
            out.push(x0);
        }
    }
    out
}

/// Runs identity cells in one mode and assembles reports.
pub struct Verifier {
    mode: Mode,
    symbolic: Context<Symbolic>,
    points: Vec<Context<AtPoint>>,
}

impl Verifier {
    pub fn new(mode: Mode, first_kind: FirstKind) -> Self {
        let points = match mode {
            Mode::Symbolic => Vec::new(),
            Mode::Numeric { points, seed } => sample_points(points, seed)
                .into_iter()
                .map(|x0| Context::new(AtPoint::new(x0).expect("nonzero point"), first_kind))
                .collect(),
        };
        Verifier {
            mode,
            symbolic: Context::new(Symbolic, first_kind),
            points,
        }
    }

    pub fn symbolic() -> Self {
        Verifier::new(Mode::Symbolic, FirstKind::Gf)
    }

    pub fn numeric() -> Self {
        Verifier::new(Mode::DEFAULT_NUMERIC, FirstKind::Gf)
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Both sides as exact Laurent polynomials, regardless of mode.
    pub fn symbolic_sides(&self, id: IdentityId, n: usize, big_n: usize) -> Sides<LaurentPoly> {
        self.symbolic.sides(id, n, big_n)
    }

    /// Both sides at each numeric sample point (empty in symbolic mode).
    pub fn point_sides(&self, id: IdentityId, n: usize, big_n: usize) -> Vec<(BigRational, Sides<BigRational>)> {
        self.points
            .iter()
            .map(|ctx| (ctx.families().domain().point().clone(), ctx.sides(id, n, big_n)))
            .collect()
    }

    /// One grid cell. For [`IdentityId::DefiningRelation`], `n` is the series
    /// order and the check is always symbolic.
    pub fn verify(&self, id: IdentityId, n: usize, big_n: usize) -> ReportEntry {
        let start = Instant::now();
        if id == IdentityId::DefiningRelation {
            let tri = Triangle::new(big_n.max(1));
            let mut entry = verify_defining_relation(&tri, big_n, n)
                .expect("grid only produces 1 <= N <= order");
            entry.elapsed = start.elapsed();
            return entry;
        }
        let (residual, rhs_polynomial) = match self.mode {
            Mode::Symbolic => {
                let Sides { lhs, rhs } = self.symbolic.sides(id, n, big_n);
                let poly = has_negative_powers(id).then(|| rhs.is_polynomial());
                (lhs - rhs, poly)
            }
            Mode::Numeric { .. } => {
                let residual = self
                    .points
                    .iter()
                    .map(|ctx| {
                        let Sides { lhs, rhs } = ctx.sides(id, n, big_n);
                        lhs - rhs
                    })
                    .find(|r| !r.is_zero())
                    .map(LaurentPoly::constant)
                    .unwrap_or_else(LaurentPoly::zero);
                (residual, None)
            }
        };
        ReportEntry {
            identity: id,
            n,
            big_n,
            pass: residual.is_zero(),
            residual,
            rhs_polynomial,
            elapsed: start.elapsed(),
        }
    }

    pub fn verify_intro_u_from_t(&self, n: usize) -> ReportEntry {
        self.verify(IdentityId::IntroUFromT, n, 0)
    }

    pub fn verify_u_from_legendre(&self, n: usize, alpha: usize) -> ReportEntry {
        if alpha == 1 {
            self.verify(IdentityId::UFromLegendre, n, 0)
        } else {
            self.verify(IdentityId::UalphaFromLegendre, n, alpha)
        }
    }

    pub fn verify_thm2(&self, n: usize, big_n: usize) -> ReportEntry {
        self.verify(IdentityId::Thm2, n, big_n)
    }

    pub fn verify_cor3(&self, n: usize, big_n: usize) -> ReportEntry {
        self.verify(IdentityId::Cor3, n, big_n)
    }

    pub fn verify_cor4_reconstructed(&self, n: usize, big_n: usize) -> ReportEntry {
        self.verify(IdentityId::Cor4Reconstructed, n, big_n)
    }

    pub fn verify_thm5(&self, n: usize, big_n: usize) -> ReportEntry {
        self.verify(IdentityId::Thm5, n, big_n)
    }

    pub fn verify_thm6(&self, n: usize, big_n: usize) -> ReportEntry {
        self.verify(IdentityId::Thm6, n, big_n)
    }

    pub fn verify_thm7(&self, n: usize, big_n: usize) -> ReportEntry {
        self.verify(IdentityId::Thm7, n, big_n)
    }

    /// Runs every cell of the grid in parallel. The report is sorted by
    /// `(identity, N, n)`, so its content does not depend on scheduling.
    pub fn run_suite(&self, grid: &Grid) -> VerificationReport {
        let entries = grid
            .cells()
            .into_par_iter()
            .map(|(id, n, big_n)| self.verify(id, n, big_n))
            .collect();
        VerificationReport::new(entries)
    }

    /// Same as [`Verifier::run_suite`] on the calling thread only.
    pub fn run_suite_sequential(&self, grid: &Grid) -> VerificationReport {
        let entries = grid
            .cells()
            .into_iter()
            .map(|(id, n, big_n)| self.verify(id, n, big_n))
            .collect();
        VerificationReport::new(entries)
    }
}

/// Defining-relation checks for `N = 1 ..= big_n_max` at one series order.
pub fn defining_relation_report(big_n_max: usize, order: usize) -> Result<VerificationReport> {
    let tri = Triangle::new(big_n_max.max(1));
    let entries = (1..=big_n_max)
        .into_par_iter()
        .map(|big_n| verify_defining_relation(&tri, big_n, order))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::new(entries))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn verifier_is_shareable() {
        fn check<T: Send + Sync>() {}
        check::<Verifier>();
    }

    #[test]
    fn compositions_count_and_uniqueness() {
        for n in 0..=15 {
            let all: Vec<_> = compositions3(n).collect();
            assert_eq!(all.len(), (n + 2) * (n + 1) / 2);
            let unique: std::collections::BTreeSet<_> = all.iter().collect();
            assert_eq!(unique.len(), all.len());
            assert!(all.iter().all(|&(m, s, p)| m + s + p == n));
        }
    }

    #[test]
    fn hand_evaluated_cells() {
        let v = Verifier::symbolic();
        // Σ U_l U_{1-l} = 2 · 2x
        let s = v.symbolic_sides(IdentityId::Thm2, 1, 1);
        assert_eq!(s.lhs, lp("4*x"));
        // (1/2) U_1 x^{-1} = 1
        let s = v.symbolic_sides(IdentityId::Thm2, 0, 1);
        assert_eq!(s.rhs, lp("1"));
        // (1/2) x^{-1} (V_0 + V_1) = 1
        let s = v.symbolic_sides(IdentityId::Thm5, 0, 1);
        assert_eq!(s.rhs, lp("1"));
        // (1/2) x^{-1} (W_1 - W_0) = 1
        let s = v.symbolic_sides(IdentityId::Thm6, 0, 1);
        assert_eq!(s.rhs, lp("1"));
        let s = v.symbolic_sides(IdentityId::UFromLegendre, 2, 0);
        assert_eq!(s.rhs, lp("4*x^2 - 1"));
        let s = v.symbolic_sides(IdentityId::IntroUFromT, 1, 0);
        assert_eq!(s.lhs, lp("4*x"));
        assert_eq!(s.rhs, lp("4*x"));
    }

    #[test]
    fn single_cells_pass() {
        let v = Verifier::symbolic();
        for n in [0, 1, 16] {
            assert!(v.verify_intro_u_from_t(n).pass);
        }
        assert!(v.verify_u_from_legendre(2, 1).pass);
        assert!(v.verify_u_from_legendre(0, 3).pass);
        assert!(v.verify_u_from_legendre(12, 3).pass);
        assert!(v.verify_thm2(0, 1).pass);
        assert!(v.verify_thm2(1, 1).pass);
        assert!(v.verify_thm2(12, 5).pass);
        assert!(v.verify_cor3(0, 1).pass);
        assert!(v.verify_cor3(4, 2).pass);
        assert!(v.verify_cor3(10, 4).pass);
        assert!(v.verify_cor4_reconstructed(0, 1).pass);
        assert!(v.verify_cor4_reconstructed(3, 2).pass);
        assert!(v.verify_cor4_reconstructed(8, 3).pass);
        assert!(v.verify_thm5(0, 1).pass);
        assert!(v.verify_thm5(2, 2).pass);
        assert!(v.verify_thm5(10, 4).pass);
        assert!(v.verify_thm6(0, 1).pass);
        assert!(v.verify_thm6(1, 1).pass);
        assert!(v.verify_thm6(10, 4).pass);
        assert!(v.verify_thm7(0, 1).pass);
        assert!(v.verify_thm7(4, 2).pass);
        assert!(v.verify_thm7(8, 3).pass);
    }

    #[test]
    fn rhs_collapses_to_polynomial() {
        let v = Verifier::symbolic();
        let e = v.verify_thm5(6, 3);
        assert_eq!(e.rhs_polynomial, Some(true));
        assert_eq!(v.verify_intro_u_from_t(3).rhs_polynomial, None);
    }

    #[test]
    fn classical_first_kind_breaks_thm7() {
        let v = Verifier::new(Mode::Symbolic, FirstKind::Classical);
        assert!(!v.verify_thm7(1, 1).pass);
        assert!(!v.verify_intro_u_from_t(1).pass);
    }

    #[test]
    fn empty_grid_gives_empty_report() {
        let v = Verifier::symbolic();
        assert!(v.run_suite(&Grid::new([], 8, 3)).is_empty());
        assert!(v.run_suite(&Grid::new([IdentityId::Thm2], 8, 0)).is_empty());
    }

    #[test]
    fn desk_scale_suite_passes() {
        let v = Verifier::symbolic();
        let report = v.run_suite(&Grid::all(8, 3));
        assert!(report.all_pass(), "{}", report.to_pretty(false));
        // 2 identities without N, 7 with N = 1..=3, n = 0..=8
        assert_eq!(report.len(), 9 * 2 + 9 * 3 * 7);
    }

    #[test]
    fn numeric_mode_agrees() {
        let v = Verifier::numeric();
        let report = v.run_suite(&Grid::all(5, 2));
        assert!(report.all_pass(), "{}", report.to_pretty(false));
        let bad = Verifier::new(Mode::DEFAULT_NUMERIC, FirstKind::Classical);
        assert!(!bad.verify_thm7(2, 1).pass);
    }

    #[test]
    fn sample_points_are_valid() {
        let pts = sample_points(20, 7);
        assert_eq!(pts.len(), 20);
        for p in &pts {
            assert!(!p.is_zero());
            assert!(p <= &int(2) && p >= &int(-2));
        }
        assert_eq!(pts, sample_points(20, 7));
    }

    #[test]
    fn defining_relation_cells() {
        let v = Verifier::symbolic();
        let report = v.run_suite(&Grid::new([IdentityId::DefiningRelation], 12, 3));
        assert_eq!(report.len(), 3);
        assert!(report.all_pass());
        assert!(defining_relation_report(4, 10).unwrap().all_pass());
    }
}
