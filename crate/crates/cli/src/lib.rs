//! Command-line front end: argument parsing, report assembly and rendering.

mod commands;
mod render;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

pub use render::{render_text, symbolic};

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "typea", version, about = "Lusztig series, families and Gauss-sum constants for SL_n and SU_n")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Character-table cache directory (default: $TYPEA_CACHE_DIR, else no cache).
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Center of SL_n / mu_d, Levi kernels, H^1 and cuspidal data.
    Center(CenterArgs),
    /// Rational series with families, Fourier matrices, Gelfand-Graev labels and Jordan counts.
    Series(GroupArgs),
    /// Gauss-sum constants of the group, or a single Gauss sum with --raw.
    Gauss(GaussArgs),
    /// Oracle census plus every property suite applicable at this size.
    Verify(GroupArgs),
}

#[derive(Debug, Args, Serialize)]
pub struct GroupArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub twisted: bool,
}

#[derive(Debug, Args, Serialize)]
pub struct CenterArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub d: u64,
    #[arg(long)]
    pub p: u64,
    /// Field size, a power of p (default p).
    #[arg(long)]
    pub q: Option<u64>,
    #[arg(long)]
    pub twisted: bool,
    /// Block sizes of a standard Levi, e.g. `2,2,2`.
    #[arg(long, value_delimiter = ',')]
    pub levi: Option<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    All,
    Closed,
    Product,
    Direct,
}

#[derive(Debug, Args, Serialize)]
pub struct GaussArgs {
    #[arg(long, required_unless_present = "raw")]
    pub n: Option<usize>,
    #[arg(long, required_unless_present = "raw")]
    pub q: Option<u64>,
    #[arg(long)]
    pub twisted: bool,
    /// Evaluate one Gauss sum `G_s(kappa^m)` over `F_{p^s}`.
    #[arg(long, requires_all = ["p", "s", "m"], conflicts_with_all = ["n", "q", "twisted"])]
    pub raw: bool,
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long)]
    pub s: Option<u32>,
    #[arg(long, allow_negative_numbers = true)]
    pub m: Option<i64>,
    #[arg(long, value_enum, default_value_t = Method::All)]
    pub method: Method,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{what} = {value} exceeds the supported bound {bound}")]
    Scale { what: &'static str, value: u64, bound: u64 },
    #[error("invalid input: {0}")]
    Input(String),
    #[error(transparent)]
    Oracle(#[from] typea_oracle::OracleError),
}

macro_rules! input_error {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Input(e.to_string())
            }
        }
    )*};
}
input_error!(
    typea::series::SeriesError,
    typea::dual::DualError,
    typea::gauss::GaussError,
    typea::root_datum::RootDatumError,
    typea::center::CenterError,
    typea::field::FieldError
);

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Verdict {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        Verdict { name: name.into(), passed, detail: None }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

/// Everything a command produces; serialized as the JSON output.
#[derive(Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub verdicts: Vec<Verdict>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }
}

/// Process output: exit code plus the text for stdout and stderr.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Run one command line (without the program name).
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(std::iter::once("typea".into()).chain(args.iter().cloned())) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let echo = args.iter().map(|a| a.to_string_lossy().into_owned()).collect::<Vec<_>>().join(" ");
    match commands::execute(&cli, echo) {
        Ok(report) => {
            let code = if report.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED };
            let stdout = match cli.format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&report).expect("reports serialize");
                    s.push('\n');
                    s
                }
                Format::Text => render_text(&report),
            };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(e) => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
