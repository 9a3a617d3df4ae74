//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on input or validation failure (and on a
//! `verify` run that finds a counterexample), 2 on usage errors.

mod report;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

pub use report::{AnalysisReport, BlockRow, Classification, CovListing, ElementRow};

use crate::error::Error;
use crate::neighborhoods::{cov, is_cov_fixed_point, quick_reject_neighborhoods};
use crate::oracle::{preimages, verify_laws_with, Law, VerificationSummary, VerifyOptions};
use crate::reduction::reduct;
use crate::setsys::{Covering, CoveringFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "rough-cover",
    version,
    about = "Neighborhoods, core blocks and reducts of set coverings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the neighborhoods Cov(C) as a covering document.
    Cov {
        /// Covering document (JSON).
        file: PathBuf,
    },
    /// Report degrees, neighborhoods, core blocks and reducibility.
    Analyze {
        /// Covering document (JSON).
        file: PathBuf,
        /// Include the common block repeat degree matrix.
        #[arg(long)]
        lambda: bool,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Print the covering with all reducible blocks removed.
    Reduce {
        /// Covering document (JSON).
        file: PathBuf,
    },
    /// Decide whether the covering is the neighborhoods of some covering.
    CheckNeighborhoods {
        /// Covering document (JSON).
        file: PathBuf,
    },
    /// List every covering whose neighborhoods equal the given covering.
    Preimages {
        /// Covering document (JSON).
        file: PathBuf,
        /// Stop after this many preimages.
        #[arg(long)]
        limit: Option<usize>,
        /// Emit a single JSON array instead of one document per line.
        #[arg(long)]
        json: bool,
    },
    /// Check every law over all coverings of {1..n}.
    Verify {
        /// Universe size, 1 to 4 (5 with --allow-large).
        #[arg(long = "n", value_name = "K")]
        n: usize,
        /// Emit the summary as JSON.
        #[arg(long)]
        json: bool,
        /// Spread the enumeration over worker threads.
        #[arg(long)]
        parallel: bool,
        /// Allow n = 5 (very long running).
        #[arg(long)]
        allow_large: bool,
    },
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code. Output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(rendered.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command) {
        Ok(Outcome { text, code }) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_INVALID
        }
    }
}

struct Outcome {
    text: String,
    code: i32,
}

impl From<String> for Outcome {
    fn from(text: String) -> Self {
        Outcome {
            text,
            code: EXIT_OK,
        }
    }
}

fn load(path: &Path) -> Result<Covering, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let doc: CoveringFile = serde_json::from_str(&text)
        .map_err(|e| format!("{}: {}", path.display(), Error::from(e)))?;
    doc.into_covering()
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn execute(command: Command) -> Result<Outcome, String> {
    Ok(match command {
        Command::Cov { file } => format!("{}\n", cov(&load(&file)?).to_json()).into(),
        Command::Reduce { file } => format!("{}\n", reduct(&load(&file)?).to_json()).into(),
        Command::Analyze { file, lambda, json } => {
            let report = AnalysisReport::new(&load(&file)?, lambda);
            if json {
                format!("{}\n", report.to_json()).into()
            } else {
                report.render().into()
            }
        }
        Command::CheckNeighborhoods { file } => check_neighborhoods(&load(&file)?).into(),
        Command::Preimages { file, limit, json } => {
            let d = load(&file)?;
            let found = preimages(&d, limit).map_err(|e| e.to_string())?;
            if json {
                let docs: Vec<CoveringFile> = found.iter().map(Covering::to_file).collect();
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&docs).expect("plain data")
                )
                .into()
            } else {
                let mut text = String::new();
                for c in &found {
                    let _ = writeln!(text, "{}", c.to_json());
                }
                let _ = writeln!(text, "{} preimage(s)", found.len());
                text.into()
            }
        }
        Command::Verify {
            n,
            json,
            parallel,
            allow_large,
        } => {
            let summary = verify_laws_with(
                n,
                VerifyOptions {
                    parallel,
                    allow_large,
                },
            )
            .map_err(|e| e.to_string())?;
            let text = if json {
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&summary).expect("plain data")
                )
            } else {
                render_summary(&summary)
            };
            let code = if summary.passed() {
                EXIT_OK
            } else {
                EXIT_INVALID
            };
            Outcome { text, code }
        }
    })
}

fn check_neighborhoods(d: &Covering) -> String {
    if let Some(reason) = quick_reject_neighborhoods(d) {
        let detail = match reason {
            crate::neighborhoods::RejectReason::ReducibleBlock { block } => {
                format!("{reason}: {}", d.show_block(block))
            }
            _ => reason.to_string(),
        };
        return format!("{d} is NOT a neighborhoods ({detail})\n");
    }
    if is_cov_fixed_point(d) {
        format!("{d} IS a neighborhoods (Cov(D) = D)\n")
    } else {
        format!("{d} is NOT a neighborhoods (Cov(D) = {} ≠ D)\n", cov(d))
    }
}

pub fn render_summary(s: &VerificationSummary) -> String {
    let mut out = String::new();
    let rows = [
        ("universe size", s.universe_size as u64),
        ("coverings", s.total_coverings),
        ("partitions", s.partitions),
        ("irreducible", s.irreducible),
        ("invariable", s.invariable),
        ("Cov fixed points", s.fixed_points),
        ("laws checked", Law::ALL.len() as u64),
        ("violations", s.violations.len() as u64),
    ];
    for (name, value) in rows {
        let _ = writeln!(out, "{name:<18}{value}");
    }
    for v in &s.violations {
        let _ = writeln!(out, "  {} on {}: {}", v.law, v.covering, v.detail);
    }
    let _ = writeln!(out, "{}", if s.passed() { "PASS" } else { "FAIL" });
    out
}
