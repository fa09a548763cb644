//! Command-line front end: evaluates the solution profiles, boundary-layer
//! tables and Dirac solutions, and writes them as reproducible CSV/JSON files.

mod output;
mod run;

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

/// Exit codes: 0 success, 2 invalid config, 3 numerical-accuracy failure,
/// 4 I/O failure.
#[derive(Debug)]
pub enum CliError {
    Config(String),
    Accuracy(String),
    Io(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Accuracy(_) => 3,
            CliError::Io(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Config(m) | CliError::Accuracy(m) | CliError::Io(m) => m,
        }
    }
}

impl From<fraclap::Error> for CliError {
    fn from(e: fraclap::Error) -> Self {
        match e {
            fraclap::Error::Accuracy(m) => CliError::Accuracy(m),
            other => CliError::Config(other.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(name = "fraclap", version, about = "Exact fractional Laplacian solutions on (-1,1) and (-1,1)^2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
struct CommonArgs {
    /// Fractional powers, comma-separated (e.g. 0.25,0.5,0.75).
    #[arg(long)]
    s: Option<String>,
    /// Grid points (per axis in 2D).
    #[arg(long)]
    grid: Option<usize>,
    /// Series truncation (terms per series dimension).
    #[arg(long)]
    trunc: Option<usize>,
    /// Output directory.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format: csv or json.
    #[arg(long)]
    format: Option<String>,
    /// JSON config file; command-line flags take precedence over it.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Solution profiles for f = 1 (Riesz vs spectral) plus the u(0)-vs-s curve.
    ConstantRhs(CommonArgs),
    /// Boundary-layer ratio table and the s = 1/2 log-exponent estimate.
    BoundaryLayer {
        #[command(flatten)]
        common: CommonArgs,
        /// Emit the published ratio table (fixed h = 2^-10, j = 1..20).
        #[arg(long)]
        table1: bool,
        /// Emit the raw k_j exponent estimates instead of the ratio table.
        #[arg(long)]
        exponent: bool,
        /// Grid step for the ratio/exponent study.
        #[arg(long)]
        h: Option<f64>,
        /// Index range a..b.
        #[arg(long)]
        j: Option<String>,
    },
    /// Dirac-delta solutions: 1D profiles or 2D grids with difference fields.
    Dirac {
        #[command(flatten)]
        common: CommonArgs,
        /// Spatial dimension, 1 or 2.
        #[arg(long)]
        dim: Option<u8>,
    },
    /// Runs the built-in oracle cross-checks.
    Selftest,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::ConstantRhs(common) => run::constant_rhs(&common),
        Command::BoundaryLayer { common, table1, exponent, h, j } => {
            run::boundary_layer(&common, table1, exponent, h, j.as_deref())
        }
        Command::Dirac { common, dim } => run::dirac(&common, dim),
        Command::Selftest => run::selftest(),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
