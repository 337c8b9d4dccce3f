//! `specdiff`: spectral derivatives of CSV-borne signals.
//!
//! Exit codes: 0 success, 1 I/O or internal failure, 2 usage error or invalid
//! sampling, 3 unparseable input, 4 numeric contamination.

mod commands;
mod io;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use specdiff::{GridKind, Method, SpecError};

use commands::DerivRequest;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid sampling: {0}")]
    Sampling(String),
    #[error("cannot parse input: {0}")]
    Parse(String),
    #[error("numeric contamination: {0}")]
    Contamination(String),
    #[error("{0}")]
    Io(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Sampling(_) => 2,
            CliError::Parse(_) => 3,
            CliError::Contamination(_) => 4,
            CliError::Io(_) | CliError::Internal(_) => 1,
        }
    }
}

impl From<SpecError> for CliError {
    fn from(e: SpecError) -> Self {
        match e {
            SpecError::InvalidSampling { reason, example } => {
                let grid: Vec<String> = example.iter().map(|v| io::format_number(*v)).collect();
                CliError::Sampling(format!("{reason}\nexample of a valid grid: {}", grid.join(", ")))
            }
            SpecError::NumericContamination { .. } => CliError::Contamination(e.to_string()),
            SpecError::InternalLogic(_) => CliError::Internal(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Fourier,
    Cheb,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Fourier => Method::Fourier,
            MethodArg::Cheb => Method::Chebyshev,
        }
    }
}

impl From<MethodArg> for GridKind {
    fn from(m: MethodArg) -> Self {
        Method::from(m).grid_kind()
    }
}

#[derive(Debug, Parser)]
#[command(name = "specdiff", version, about = "Spectral derivatives of sampled signals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print sample locations for a grid.
    Points(PointsArgs),
    /// Differentiate CSV signals.
    Deriv(DerivArgs),
    /// Print DFT coefficients or Chebyshev series coefficients.
    Spectrum(SpectrumArgs),
    /// Print the exact chain-rule factors and endpoint constants.
    Table(TableArgs),
}

#[derive(Debug, Args)]
struct PointsArgs {
    #[arg(long, value_enum)]
    kind: MethodArg,
    /// Chebyshev order N; N + 1 points.
    #[arg(long)]
    n: Option<usize>,
    /// Periodic sample count M.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    a: f64,
    #[arg(long, allow_hyphen_values = true)]
    b: f64,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct DerivArgs {
    /// Input CSV; stdin if omitted or `-`.
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "fourier")]
    method: MethodArg,
    #[arg(long, default_value_t = 1)]
    order: usize,
    #[arg(long, default_value_t = 0)]
    axis: usize,
    /// Keep modes 0..=cutoff, zero the rest.
    #[arg(long)]
    filter_cutoff: Option<usize>,
    /// Domain start; with --b, the input has no t column.
    #[arg(long, allow_hyphen_values = true)]
    a: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<f64>,
    /// Treat the numeric block as a 2-D field.
    #[arg(long)]
    matrix: bool,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SpectrumArgs {
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "fourier")]
    method: MethodArg,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<f64>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long, default_value_t = 4)]
    order: usize,
    #[arg(long)]
    output: Option<PathBuf>,
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Points(p) => {
            let pts = commands::points(p.kind.into(), p.n, p.m, p.a, p.b)?;
            let mut out = io::open_output(p.output.as_deref())?;
            io::write_rows(&mut out, None, &[pts])
        }
        Command::Deriv(d) => {
            let table = io::read_table(d.input.as_deref())?;
            let req = DerivRequest {
                method: d.method.into(),
                order: d.order,
                axis: d.axis,
                cutoff: d.filter_cutoff,
                a: d.a,
                b: d.b,
                matrix: d.matrix,
            };
            let block = commands::deriv(&table, &req)?;
            let mut out = io::open_output(d.output.as_deref())?;
            io::write_rows(&mut out, block.header.as_deref(), &block.columns)
        }
        Command::Spectrum(s) => {
            let table = io::read_table(s.input.as_deref())?;
            let block = commands::spectrum(&table, s.method.into(), s.a, s.b)?;
            let mut out = io::open_output(s.output.as_deref())?;
            io::write_rows(&mut out, block.header.as_deref(), &block.columns)
        }
        Command::Table(t) => {
            let text = commands::table(t.order)?;
            let mut out = io::open_output(t.output.as_deref())?;
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::Io(e.to_string()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("specdiff: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
