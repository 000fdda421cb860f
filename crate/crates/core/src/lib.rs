//! Exact construction and certification of Chebyshev and Legendre
//! generating-function identities.
//!
//! The coefficient triangle `a_i(N)` solves
//!
//! ```text
//! 2^N N! F^{N+1} = Σ_{i=1}^{N} a_i(N) (x - t)^{i - 2N} F^{(i)},   F(t, x) = 1 / (1 - 2tx + t^2),
//! ```
//!
//! and feeds a family of convolution identities between higher-order
//! Chebyshev polynomials of all four kinds and Legendre polynomials. All
//! arithmetic is over the rationals; identities are certified as exact
//! equalities of Laurent polynomials in `x`.
//!
//! ```
//! use cheb_identities::{triangle_recurrence, Verifier};
//!
//! let t = triangle_recurrence(4).unwrap();
//! assert_eq!(t.row(4).iter().map(|a| a.to_string()).collect::<Vec<_>>(), ["15", "15", "6", "1"]);
//!
//! let v = Verifier::symbolic();
//! assert!(v.verify_thm2(6, 3).pass);
//! ```

pub mod arith;
pub mod cli;
pub mod error;
pub mod families;
pub mod laurent;
pub mod report;
pub mod ring;
pub mod series;
pub mod triangle;
pub mod verify;

pub use arith::BigRational;
pub use error::{Error, Result};
pub use families::{explicit_t, family_poly, ode_residual, FamilySpec, FamilyTable, Kind, Ode};
pub use laurent::LaurentPoly;
pub use report::{EntryRecord, IdentityId, ReportEntry, VerificationReport};
pub use series::{expand_negpow_xt, gf_expand, TruncatedSeries};
pub use triangle::{a1_closed, a_closed, one_step_expansion, triangle_recurrence, verify_defining_relation, Triangle};
pub use verify::{Grid, FirstKind, Mode, Verifier};
