//! The `sospin` command line: table regeneration, verification, and
//! expression decomposition.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error (bad flags,
//! parse errors, caps exceeded). Level caps default to k ≤ 6 and 2s ≤ 4 and
//! can be raised with the `SOSPIN_CAP` environment variable.

use std::io::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::render::{
    multipole_table, render_decomposition, render_multipole_table, render_spin_table, OutputFormat,
};
use crate::spinalg::{build_spin_algebra, central_basis, SpinLabel};
use crate::verify::{self, VerifyOptions};

pub const DEFAULT_K_CAP: u32 = 6;
pub const DEFAULT_TWO_S_CAP: u32 = 4;
pub const CAP_ENV_VAR: &str = "SOSPIN_CAP";

fn cap_override() -> Option<u32> {
    std::env::var(CAP_ENV_VAR).ok()?.parse().ok()
}

fn k_cap() -> u32 {
    cap_override().unwrap_or(DEFAULT_K_CAP)
}

fn two_s_cap() -> u32 {
    cap_override().unwrap_or(DEFAULT_TWO_S_CAP)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Latex,
    Csv,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> OutputFormat {
        match f {
            FormatArg::Text => OutputFormat::Text,
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Latex => OutputFormat::Latex,
            FormatArg::Csv => OutputFormat::Csv,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "sospin",
    version,
    about = "Exact so(3) kernel: operator projectors, multipole tensors, and finite spin algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical multipole component images for levels 0..=k-max.
    #[command(name = "multipole-table")]
    MultipoleTable {
        #[arg(long = "k-max", default_value_t = 4)]
        k_max: u32,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the structure-constant table of the spin algebra S_{two_s/2}.
    #[command(name = "spin-table")]
    SpinTable {
        #[arg(long = "two-s")]
        two_s: u32,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the identity verification suite; exits 1 if anything fails.
    Verify {
        /// Largest doubled spin to check.
        #[arg(long = "two-s", default_value_t = 4)]
        two_s: u32,
        /// Largest multipole level to check.
        #[arg(long = "k-max", default_value_t = 6)]
        k_max: u32,
        /// Also cross-check against the complex matrix representations.
        #[arg(long)]
        oracle: bool,
    },
    /// Decompose an expression in Jx, Jy, Jz over central multiples of the
    /// multipole components.
    Decompose {
        /// Expression, e.g. "Jx*Jy - Jy*Jx" or "(1/2)*Jz*Jz".
        expression: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(text: &str, out: Option<&PathBuf>) -> i32 {
    match out {
        None => {
            print!("{text}");
            0
        }
        Some(path) => {
            match std::fs::File::create(path).and_then(|mut f| f.write_all(text.as_bytes())) {
                Ok(()) => 0,
                Err(e) => {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    2
                }
            }
        }
    }
}

fn usage_error(message: impl std::fmt::Display) -> i32 {
    eprintln!("error: {message}");
    2
}

/// Parses the process arguments and runs the requested command, returning
/// the exit code.
pub fn run() -> i32 {
    run_with(std::env::args_os())
}

pub fn run_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    // clap itself exits with code 2 on usage errors.
    let cli = Cli::parse_from(args);
    match cli.command {
        Command::MultipoleTable { k_max, format, out } => {
            if k_max > k_cap() {
                return usage_error(format_args!(
                    "k-max {k_max} exceeds the cap {} (override with {CAP_ENV_VAR})",
                    k_cap()
                ));
            }
            let doc = multipole_table(k_max);
            emit(&render_multipole_table(&doc, format.into()), out.as_ref())
        }
        Command::SpinTable { two_s, format, out } => {
            if two_s > two_s_cap() {
                return usage_error(format_args!(
                    "two-s {two_s} exceeds the cap {} (override with {CAP_ENV_VAR})",
                    two_s_cap()
                ));
            }
            match build_spin_algebra(SpinLabel { two_s }) {
                Ok(table) => emit(&render_spin_table(&table, format.into()), out.as_ref()),
                Err(e) => usage_error(e),
            }
        }
        Command::Verify {
            two_s,
            k_max,
            oracle,
        } => {
            if two_s > two_s_cap() || k_max > k_cap() {
                return usage_error(format_args!(
                    "requested levels exceed the caps (two-s <= {}, k-max <= {}; override with {CAP_ENV_VAR})",
                    two_s_cap(),
                    k_cap()
                ));
            }
            let opts = VerifyOptions {
                two_s_max: two_s,
                k_max,
                oracle,
                ..VerifyOptions::default()
            };
            let report = match verify::run(&opts) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: verification aborted: {e}");
                    return 1;
                }
            };
            for item in &report.items {
                let mark = if item.passed { "ok  " } else { "FAIL" };
                println!("{mark} {:34} {}", item.id, item.statement);
            }
            if let Some(dev) = report.oracle_max_deviation {
                println!("oracle max deviation: {dev:.3e}");
            }
            let failed = report.failed_ids();
            if failed.is_empty() {
                println!("verified {} identities: all passed", report.items.len());
                0
            } else {
                println!(
                    "verified {} identities: {} FAILED: {}",
                    report.items.len(),
                    failed.len(),
                    failed.join(", ")
                );
                1
            }
        }
        Command::Decompose {
            expression,
            format,
            out,
        } => {
            let element = match crate::expr::parse(&expression) {
                Ok(e) => e,
                Err(Error::Parse { position, message }) => {
                    return usage_error(format_args!("at byte {position}: {message}"));
                }
                Err(e) => return usage_error(e),
            };
            let degree = element.degree().unwrap_or(0);
            if degree > k_cap() {
                return usage_error(format_args!(
                    "expression degree {degree} exceeds the cap {} (override with {CAP_ENV_VAR})",
                    k_cap()
                ));
            }
            let basis = match central_basis(degree) {
                Ok(b) => b,
                Err(e) => return usage_error(e),
            };
            let coeffs = match basis.reduce(&element) {
                Ok(c) => c,
                Err(e) => return usage_error(e),
            };
            // The decomposition must reconstruct the input exactly.
            assert_eq!(basis.reconstruct(&coeffs), element);
            let mut text = render_decomposition(&coeffs, format.into());
            if matches!(format, FormatArg::Text) {
                text.push_str("reconstruction: exact\n");
            }
            emit(&text, out.as_ref())
        }
    }
}
