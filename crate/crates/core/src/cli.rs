//! The `chebid` command line.
//!
//! Exit codes: 0 on success, 1 when a verification cell fails, 2 on usage
//! errors.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::families::{FamilySpec, FamilyTable, Kind};
use crate::report::{IdentityId, VerificationReport};
use crate::triangle::Triangle;
use crate::verify::{defining_relation_report, FirstKind, Grid, Mode, Verifier};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "chebid", version, about = "Exact Chebyshev/Legendre identity toolkit")]
pub struct Cli {
    /// Write output to this file instead of standard output
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one member of a polynomial family
    Poly {
        /// T (classical), Tgf, U, V, W or P (Legendre)
        #[arg(long)]
        family: Kind,
        /// Order of the generating-function power
        #[arg(long, default_value_t = 1)]
        alpha: u32,
        /// Degree
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Print rows of the coefficient triangle a_i(N)
    Triangle {
        #[arg(long = "n-max")]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Certify identities over a grid of (n, N)
    Verify {
        /// Identity name, or `all`
        identity: String,
        #[arg(long = "n-max", default_value_t = 8)]
        n_max: usize,
        #[arg(long = "N-max", default_value_t = 3)]
        big_n_max: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Symbolic)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
        /// First-kind normalization used inside the identities
        #[arg(long = "first-kind", value_enum, default_value_t = FirstKindArg::Gf)]
        first_kind: FirstKindArg,
        /// Record per-cell wall time (makes output run-dependent)
        #[arg(long)]
        timings: bool,
    },
    /// Check the defining differential relation of the triangle as series
    DefiningRelation {
        #[arg(long = "N-max", default_value_t = 6)]
        big_n_max: usize,
        #[arg(long, default_value_t = 24)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Symbolic,
    Numeric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FirstKindArg {
    Gf,
    Classical,
}

#[derive(Serialize)]
struct TriangleRow {
    #[serde(rename = "N")]
    n: usize,
    a: Vec<String>,
}

struct Outcome {
    text: String,
    code: i32,
}

fn usage(msg: impl std::fmt::Display) -> Result<Outcome, String> {
    Err(msg.to_string())
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn render_report(report: &VerificationReport, format: Format, timings: bool) -> Outcome {
    let text = match format {
        Format::Pretty => report.to_pretty(timings),
        Format::Json => report.to_json(timings),
        Format::Csv => report.to_csv(timings),
    };
    let code = if report.all_pass() { EXIT_OK } else { EXIT_FAILED };
    Outcome { text, code }
}

fn poly(kind: Kind, alpha: u32, n: usize, format: Format) -> Result<Outcome, String> {
    let spec = match FamilySpec::new(kind, alpha) {
        Ok(spec) => spec,
        Err(e) => return usage(e),
    };
    let p = FamilyTable::default().get(spec, n);
    let text = match format {
        Format::Pretty => format!("{p}\n"),
        Format::Json => {
            let triples: Vec<(i64, String, String)> = p
                .triples()
                .into_iter()
                .rev()
                .map(|(e, num, den)| (e, num.to_string(), den.to_string()))
                .collect();
            json(&triples)
        }
        Format::Csv => {
            let mut s = String::from("exponent,numerator,denominator\n");
            for (e, num, den) in p.triples().into_iter().rev() {
                let _ = writeln!(s, "{e},{num},{den}");
            }
            s
        }
    };
    Ok(Outcome { text, code: EXIT_OK })
}

fn triangle(n_max: usize, format: Format) -> Result<Outcome, String> {
    if n_max == 0 {
        return usage("--n-max must be at least 1");
    }
    let t = Triangle::new(n_max);
    let text = match format {
        Format::Pretty => {
            let mut s = String::new();
            for (n, row) in t.rows() {
                let cells: Vec<String> = row.iter().map(|a| a.to_string()).collect();
                let _ = writeln!(s, "N={n:<3} {}", cells.join(" "));
            }
            s
        }
        Format::Json => {
            let rows: Vec<TriangleRow> = t
                .rows()
                .map(|(n, row)| TriangleRow {
                    n,
                    a: row.iter().map(|a| a.to_string()).collect(),
                })
                .collect();
            json(&rows)
        }
        Format::Csv => {
            let mut s = String::new();
            for (_, row) in t.rows() {
                let cells: Vec<String> = row.iter().map(|a| a.to_string()).collect();
                let _ = writeln!(s, "{}", cells.join(","));
            }
            s
        }
    };
    Ok(Outcome { text, code: EXIT_OK })
}

fn dispatch(command: Command) -> Result<Outcome, String> {
    match command {
        Command::Poly {
            family,
            alpha,
            n,
            format,
        } => poly(family, alpha, n, format),
        Command::Triangle { n_max, format } => triangle(n_max, format),
        Command::Verify {
            identity,
            n_max,
            big_n_max,
            mode,
            format,
            first_kind,
            timings,
        } => {
            let identities: Vec<IdentityId> = if identity.eq_ignore_ascii_case("all") {
                IdentityId::ALL.to_vec()
            } else {
                match identity.parse() {
                    Ok(id) => vec![id],
                    Err(e) => return usage(e),
                }
            };
            let mode = match mode {
                ModeArg::Symbolic => Mode::Symbolic,
                ModeArg::Numeric => Mode::DEFAULT_NUMERIC,
            };
            let first_kind = match first_kind {
                FirstKindArg::Gf => FirstKind::Gf,
                FirstKindArg::Classical => FirstKind::Classical,
            };
            let verifier = Verifier::new(mode, first_kind);
            let report = verifier.run_suite(&Grid::new(identities, n_max, big_n_max));
            Ok(render_report(&report, format, timings))
        }
        Command::DefiningRelation {
            big_n_max,
            order,
            format,
            timings,
        } => {
            if big_n_max > order {
                return usage("--order must be at least --N-max");
            }
            match defining_relation_report(big_n_max, order) {
                Ok(report) => Ok(render_report(&report, format, timings)),
                Err(e) => usage(e),
            }
        }
    }
}

/// Parses `argv` (including the program name), runs the command and writes
/// its output. Returns the process exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let outcome = match dispatch(cli.command) {
        Ok(outcome) => outcome,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &outcome.text),
        None => stdout.write_all(outcome.text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    outcome.code
}
