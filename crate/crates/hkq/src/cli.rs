//! Command-line front end: each subcommand is a thin shell over exactly one
//! library operation, with JSON (default) or CSV output on stdout.
//!
//! Exit codes: 0 on success, 1 on domain errors (a machine-readable error
//! object is printed), 2 on usage errors.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::charring::{decompose_character, substitute_characters, Character, GroupDescriptor};
use crate::error::{Error, Result};
use crate::genseries::{localize, FixedPointSet, TruncatedSeries};
use crate::models::adhm::{adhm_check, AdhmDatum};
use crate::models::atiyah_hitchin::{ah_integral, sample_w_bound};
use crate::models::flat::{dimension_table, hprime_series, FlatModel};
use crate::models::taubnut::{taubnut_l2, taubnut_series, TaubNutModel};
use crate::specfun::{ah_params, ah_params_mc, elliptic_e, elliptic_k};

#[derive(Parser)]
#[command(
    name = "hkq",
    version,
    about = "Exact character series, fixed-point localisation, and numerical checks for Sp(1)-symmetric hyper-Kähler quantisation"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Args)]
struct FormatOpt {
    /// Output format (CSV is available for flat tabular results only)
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Subcommand)]
enum Cmd {
    /// Graded rank series of a model (flat H'(t,t̃) or the Taub-NUT series)
    Series {
        /// Model: flat | taubnut
        #[arg(long)]
        model: String,
        /// Quaternionic dimension (flat model only)
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Truncation order N
        #[arg(long)]
        order: i64,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Expand a sum over torus fixed points to a truncated series
    Localize {
        /// Fixed-point data as inline JSON: {"points":[...]}
        #[arg(long, conflicts_with = "file")]
        points: Option<String>,
        /// Read the fixed-point JSON from a file
        #[arg(long)]
        file: Option<PathBuf>,
        /// Truncation order N
        #[arg(long)]
        order: i64,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Decompose a character into irreducible multiplicities
    Decompose {
        /// Group: sp1, sp2, …, or torus:R
        #[arg(long)]
        group: String,
        /// Character as inline JSON: {"terms":[{"w":[..],"m":..},..]}
        #[arg(long = "char", conflicts_with = "file")]
        character: Option<String>,
        /// Read the character JSON from a file
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Replace dominant-weight symbols by irreducible characters, degreewise
    Substitute {
        /// Group: sp1, sp2, …, or torus:R
        #[arg(long)]
        group: String,
        /// Symbol series as inline JSON: {"order":N,"coeffs":[...]}
        #[arg(long, conflicts_with = "file")]
        series: Option<String>,
        /// Read the series JSON from a file
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Dimension tables from a multiplicity ledger (flat model built in)
    Ledger {
        /// Model: flat (ignored when --file is given)
        #[arg(long, default_value = "flat")]
        model: String,
        /// Quaternionic dimension of the flat model
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Largest grading degree of the flat ledger
        #[arg(long, default_value_t = 8)]
        dmax: i64,
        /// Read a ledger JSON {"entries":[{"d":..,"lambda":[..],"m":..}]}
        /// and report its super dimensions instead
        #[arg(long)]
        file: Option<PathBuf>,
        /// Group for a --file ledger: sp1, sp2, …, or torus:R
        #[arg(long, default_value = "sp1")]
        group: String,
        /// With --file: print the trivialising-twist table instead
        #[arg(long, default_value_t = false)]
        twist: bool,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Cohomology dimensions of O(d) on the projective line
    Cohomology {
        /// Smallest degree
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        dmin: i64,
        /// Largest degree
        #[arg(long, allow_negative_numbers = true)]
        dmax: i64,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Taub-NUT L² pairing of w₁ⁿ w₂^m against the quantisation weight
    TnL2 {
        /// Taub-NUT parameter a ≥ 0
        #[arg(long)]
        a: f64,
        /// Quantisation parameter ħ > 0
        #[arg(long, default_value_t = 1.0)]
        hbar: f64,
        /// Exponent of w₁
        #[arg(long, default_value_t = 0)]
        n: u32,
        /// Exponent of w₂
        #[arg(long, default_value_t = 0)]
        m: u32,
        /// Use x₁ instead of x₂ in the w₂ exponent
        #[arg(long, default_value_t = false)]
        w2_x1: bool,
    },
    /// The Taub-NUT graded rank series (equal to the flat rank-one series)
    TnSeries {
        /// Truncation order N
        #[arg(long)]
        order: i64,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Atiyah-Hitchin metric coefficients at a modulus
    AhParams {
        /// Modulus k in (0,1)
        #[arg(long, conflicts_with = "mc")]
        k: Option<f64>,
        /// Complementary parameter 1−k² in (0,1), preferred near k = 1
        #[arg(long)]
        mc: Option<f64>,
    },
    /// Volume integral of e^{-αΩ} over the Atiyah-Hitchin manifold
    AhIntegrate {
        /// Exponent α > 0
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        /// Relative refinement tolerance
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Sample the |w|² bound on random SU(2) parameters
    AhWbound {
        /// Modulus k in (0,1)
        #[arg(long)]
        k: f64,
        /// Number of samples
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
    },
    /// Residuals, stability, and norm of an ADHM datum
    AdhmCheck {
        /// Read the datum JSON from a file
        #[arg(long)]
        file: PathBuf,
        /// Numerical rank tolerance
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Complete elliptic integrals K(k) and E(k)
    Elliptic {
        /// Modulus k
        #[arg(long)]
        k: f64,
    },
}

/// Monte-Carlo seed: the HKQ_SEED environment variable, default 0.
fn seed_from_env() -> u64 {
    std::env::var("HKQ_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0)
}

fn read_payload(inline: Option<String>, file: Option<PathBuf>, what: &str) -> Result<String> {
    match (inline, file) {
        (Some(s), None) => Ok(s),
        (None, Some(p)) => std::fs::read_to_string(&p)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", p.display()))),
        _ => Err(Error::Parse(format!(
            "exactly one of an inline {what} or --file is required"
        ))),
    }
}

fn parse_json(text: &str) -> Result<serde_json::Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))
}

#[derive(Serialize)]
struct EllipticOut {
    #[serde(rename = "K")]
    k_value: f64,
    #[serde(rename = "E")]
    e_value: f64,
}

#[derive(Serialize)]
struct CohomologyRow {
    d: i64,
    h0: i64,
    h1: i64,
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    let text = serde_json::to_string(value)
        .map_err(|e| Error::Parse(format!("serialisation failed: {e}")))?;
    println!("{text}");
    Ok(())
}

fn series_output(series: &TruncatedSeries, format: OutputFormat) -> Result<()> {
    match format {
        OutputFormat::Json => print_json(&series.to_json()),
        OutputFormat::Csv => {
            println!("d,rank");
            for (d, rank) in series.rank_table() {
                println!("{d},{rank}");
            }
            Ok(())
        }
    }
}

fn execute(cmd: Cmd) -> Result<()> {
    match cmd {
        Cmd::Series {
            model,
            n,
            order,
            format,
        } => {
            let series = match model.as_str() {
                "flat" => {
                    FlatModel::new(n, 1.0)?;
                    hprime_series(n, order)?
                }
                "taubnut" => taubnut_series(order)?,
                other => {
                    return Err(Error::Parse(format!(
                        "unknown model {other:?} (expected flat or taubnut)"
                    )))
                }
            };
            series_output(&series, format.format)
        }
        Cmd::Localize {
            points,
            file,
            order,
            format,
        } => {
            let text = read_payload(points, file, "--points payload")?;
            let set: FixedPointSet = serde_json::from_str(&text)
                .map_err(|e| Error::Parse(format!("invalid fixed-point JSON: {e}")))?;
            let series = localize(&set.points, order)?;
            series_output(&series, format.format)
        }
        Cmd::Decompose {
            group,
            character,
            file,
        } => {
            let g = GroupDescriptor::parse(&group)?;
            let text = read_payload(character, file, "--char payload")?;
            let value = parse_json(&text)?;
            let h = Character::from_json(g.rank(), &value)?;
            let mults = decompose_character(g, &h)?;
            print_json(&mults.to_json())
        }
        Cmd::Substitute {
            group,
            series,
            file,
        } => {
            let g = GroupDescriptor::parse(&group)?;
            let text = read_payload(series, file, "--series payload")?;
            let value = parse_json(&text)?;
            let symbols = TruncatedSeries::from_json(g.rank(), &value)?;
            let out = substitute_characters(g, &symbols)?;
            print_json(&out.to_json())
        }
        Cmd::Ledger {
            model,
            n,
            dmax,
            file,
            group,
            twist,
            format,
        } => {
            if let Some(path) = file {
                let g = GroupDescriptor::parse(&group)?;
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
                let ledger: crate::cp1rep::QuantumLedger = serde_json::from_str(&text)
                    .map_err(|e| Error::Parse(format!("invalid ledger JSON: {e}")))?;
                if twist {
                    let rows = crate::cp1rep::twist_dims(&ledger, g)?;
                    return match format.format {
                        OutputFormat::Json => print_json(&rows),
                        OutputFormat::Csv => {
                            println!("d,lambda,j,dim");
                            for r in rows {
                                println!("{},\"{}\",{},{}", r.d, r.lambda, r.j, r.dim);
                            }
                            Ok(())
                        }
                    };
                }
                let dims = crate::cp1rep::super_hilbert_dims(&ledger, g)?;
                let rows: Vec<serde_json::Value> = dims
                    .iter()
                    .map(|(d, (even, odd))| {
                        serde_json::json!({
                            "d": d,
                            "even": crate::charring::bigint_to_json(even),
                            "odd": crate::charring::bigint_to_json(odd),
                        })
                    })
                    .collect();
                return match format.format {
                    OutputFormat::Json => print_json(&rows),
                    OutputFormat::Csv => {
                        println!("d,even,odd");
                        for (d, (even, odd)) in dims {
                            println!("{d},{even},{odd}");
                        }
                        Ok(())
                    }
                };
            }
            if model != "flat" {
                return Err(Error::Parse(format!(
                    "unknown model {model:?} (only flat has a built-in ledger)"
                )));
            }
            let rows = dimension_table(&FlatModel::new(n, 1.0)?, dmax)?;
            match format.format {
                OutputFormat::Json => print_json(&rows),
                OutputFormat::Csv => {
                    println!("d,lambda,m,even,odd,stated_even");
                    for r in rows {
                        println!(
                            "{},\"{}\",{},{},{},{}",
                            r.d, r.lambda, r.m, r.even, r.odd, r.stated_even
                        );
                    }
                    Ok(())
                }
            }
        }
        Cmd::Cohomology { dmin, dmax, format } => {
            if dmin > dmax {
                return Err(Error::Domain(format!(
                    "empty degree range: {dmin} > {dmax}"
                )));
            }
            let rows: Vec<CohomologyRow> = (dmin..=dmax)
                .map(|d| {
                    let s = crate::cp1rep::cohomology_dims(d);
                    CohomologyRow {
                        d,
                        h0: s.even,
                        h1: s.odd,
                    }
                })
                .collect();
            match format.format {
                OutputFormat::Json => print_json(&rows),
                OutputFormat::Csv => {
                    println!("d,h0,h1");
                    for r in rows {
                        println!("{},{},{}", r.d, r.h0, r.h1);
                    }
                    Ok(())
                }
            }
        }
        Cmd::TnL2 {
            a,
            hbar,
            n,
            m,
            w2_x1,
        } => {
            let mut model = TaubNutModel::new(a, hbar)?;
            model.w2_exponent_x1 = w2_x1;
            let outcome = taubnut_l2(&model, n, m)?;
            print_json(&outcome)
        }
        Cmd::TnSeries { order, format } => {
            let series = taubnut_series(order)?;
            series_output(&series, format.format)
        }
        Cmd::AhParams { k, mc } => {
            let params = match (k, mc) {
                (Some(k), None) => ah_params(k)?,
                (None, Some(mc)) => ah_params_mc(mc)?,
                _ => {
                    return Err(Error::Parse(
                        "exactly one of --k or --mc is required".into(),
                    ))
                }
            };
            print_json(&params)
        }
        Cmd::AhIntegrate { alpha, tol } => {
            let outcome = ah_integral(alpha, tol)?;
            print_json(&outcome)
        }
        Cmd::AhWbound { k, samples } => {
            let report = sample_w_bound(k, samples, seed_from_env())?;
            print_json(&report)
        }
        Cmd::AdhmCheck { file, tol } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", file.display())))?;
            let datum: AdhmDatum = serde_json::from_str(&text)
                .map_err(|e| Error::Parse(format!("invalid ADHM JSON: {e}")))?;
            let report = adhm_check(&datum, tol)?;
            print_json(&report)
        }
        Cmd::Elliptic { k } => {
            let out = EllipticOut {
                k_value: elliptic_k(k)?,
                e_value: elliptic_e(k)?,
            };
            print_json(&out)
        }
    }
}

#[derive(Serialize)]
struct ErrorObject<'a> {
    error: ErrorBody<'a>,
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    kind: &'a str,
    message: String,
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Dimension(_) => "dimension",
        Error::Domain(_) => "domain",
        Error::NotACharacter(_) => "not_a_character",
        Error::EmptyCharacter => "empty_character",
        Error::AmbiguousExpansion(_) => "ambiguous_expansion",
        Error::InexactDivision(_) => "inexact_division",
        Error::Convergence { .. } => "convergence",
        Error::Parse(_) => "parse",
    }
}

/// Parse and run; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.cmd) {
        Ok(()) => 0,
        Err(e) => {
            let obj = ErrorObject {
                error: ErrorBody {
                    kind: error_kind(&e),
                    message: e.to_string(),
                },
            };
            println!(
                "{}",
                serde_json::to_string(&obj).unwrap_or_else(|_| format!("{{\"error\":\"{e}\"}}"))
            );
            1
        }
    }
}
