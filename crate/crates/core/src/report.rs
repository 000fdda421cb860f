//! Verification outcomes and their pretty, JSON and CSV renderings.

use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::laurent::LaurentPoly;

/// Every certified statement. Declaration order is report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    /// `(n + 1) U_n = Σ T̃_l U_{n-l}`.
    IntroUFromT,
    /// `U_n = Σ p_l p_{n-l}`.
    UFromLegendre,
    /// `U_n^(α) = Σ p_l^(α) p_{n-l}^(α)`; the `N` column carries `α`.
    UalphaFromLegendre,
    Thm2,
    Cor3,
    Cor4Reconstructed,
    Thm5,
    Thm6,
    Thm7,
    /// `2^N N! F^{N+1} = Σ a_i(N) (x - t)^{i-2N} F^{(i)}` as a series; the `n`
    /// column carries the truncation order.
    DefiningRelation,
}

impl IdentityId {
    /// The convolution identities run by `verify all`.
    pub const ALL: [IdentityId; 9] = [
        IdentityId::IntroUFromT,
        IdentityId::UFromLegendre,
        IdentityId::UalphaFromLegendre,
        IdentityId::Thm2,
        IdentityId::Cor3,
        IdentityId::Cor4Reconstructed,
        IdentityId::Thm5,
        IdentityId::Thm6,
        IdentityId::Thm7,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::IntroUFromT => "intro_U_from_T",
            IdentityId::UFromLegendre => "U_from_Legendre",
            IdentityId::UalphaFromLegendre => "Ualpha_from_Legendre",
            IdentityId::Thm2 => "thm2",
            IdentityId::Cor3 => "cor3",
            IdentityId::Cor4Reconstructed => "cor4_reconstructed",
            IdentityId::Thm5 => "thm5",
            IdentityId::Thm6 => "thm6",
            IdentityId::Thm7 => "thm7",
            IdentityId::DefiningRelation => "defining_relation",
        }
    }

    /// Whether the identity is indexed by `N` (or `α`) as well as `n`.
    pub fn uses_big_n(self) -> bool {
        !matches!(self, IdentityId::IntroUFromT | IdentityId::UFromLegendre)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        IdentityId::ALL
            .into_iter()
            .chain([IdentityId::DefiningRelation])
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown identity '{s}'"))
    }
}

/// One grid cell. `big_n` is 0 for identities without an `N` index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportEntry {
    pub identity: IdentityId,
    pub n: usize,
    pub big_n: usize,
    pub pass: bool,
    pub residual: LaurentPoly,
    /// Whether the right-hand side was free of negative powers of `x`; only
    /// known in symbolic mode for the identities that carry such powers.
    pub rhs_polynomial: Option<bool>,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub entries: Vec<ReportEntry>,
}

/// The JSON shape of one entry. Residuals use the canonical text rendering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryRecord {
    pub identity: String,
    pub n: usize,
    #[serde(rename = "N")]
    pub big_n: usize,
    pub pass: bool,
    pub residual: String,
    pub ms: u64,
}

impl VerificationReport {
    pub fn new(mut entries: Vec<ReportEntry>) -> Self {
        entries.sort_by_key(|e| (e.identity, e.big_n, e.n));
        VerificationReport { entries }
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// With `timings` off every `ms` is 0, which keeps output byte-stable
    /// across runs.
    pub fn records(&self, timings: bool) -> Vec<EntryRecord> {
        self.entries
            .iter()
            .map(|e| EntryRecord {
                identity: e.identity.name().to_string(),
                n: e.n,
                big_n: e.big_n,
                pass: e.pass,
                residual: e.residual.to_string(),
                ms: if timings { e.elapsed.as_millis() as u64 } else { 0 },
            })
            .collect()
    }

    pub fn to_json(&self, timings: bool) -> String {
        records_to_json(&self.records(timings))
    }

    pub fn to_csv(&self, timings: bool) -> String {
        let mut out = String::from("identity,n,N,pass,residual,ms\n");
        for r in self.records(timings) {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                r.identity, r.n, r.big_n, r.pass, r.residual, r.ms
            );
        }
        out
    }

    pub fn to_pretty(&self, timings: bool) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let verdict = if e.pass { "pass" } else { "FAIL" };
            let _ = write!(out, "{:<22} N={:<3} n={:<3} {verdict}", e.identity.name(), e.big_n, e.n);
            if timings {
                let _ = write!(out, "  {:>8.3} ms", e.elapsed.as_secs_f64() * 1e3);
            }
            if !e.pass {
                let _ = write!(out, "  residual: {}", e.residual);
            }
            out.push('\n');
        }
        let failed = self.failures().count();
        let _ = writeln!(
            out,
            "{} cells, {} passed, {} failed",
            self.len(),
            self.len() - failed,
            failed
        );
        out
    }
}

pub fn records_to_json(records: &[EntryRecord]) -> String {
    let mut s = serde_json::to_string_pretty(records).expect("records serialize");
    s.push('\n');
    s
}
