use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hardedge_core::scalar::init_precision_from_env;
use hardedge_core::Error;

mod law;
mod mc;
mod mvop;
mod params;
mod verify;

/// Exact smallest-eigenvalue laws of beta-Laguerre and beta-Jacobi ensembles.
#[derive(Parser, Debug)]
#[command(name = "hardedge", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Multivariate Laguerre, Jacobi or Jack polynomial in the monomial basis.
    Mvop(mvop::MvopArgs),
    /// Closed-form smallest (or largest) eigenvalue law.
    Law(law::LawArgs),
    /// Run an identity suite; exit 1 if any check fails.
    Verify(verify::VerifyArgs),
    /// Draw smallest eigenvalues from a tridiagonal matrix model.
    Sample(mc::SampleArgs),
    /// Kolmogorov-Smirnov test of samples against the exact CDF; exit 1 on failure.
    Kstest(mc::KsArgs),
}

/// Ensemble parameters shared by several commands. Values are `p/q`,
/// integers, decimals or `e`.
#[derive(Args, Debug, Clone, Default)]
pub struct EnsembleFlags {
    /// Matrix size.
    #[arg(short = 'n', long = "n")]
    pub n: Option<usize>,
    #[arg(long)]
    pub beta: Option<String>,
    /// Laguerre weight exponent.
    #[arg(long)]
    pub gamma: Option<String>,
    /// Jacobi exponent at 0.
    #[arg(long)]
    pub gamma1: Option<String>,
    /// Jacobi exponent at 1.
    #[arg(long)]
    pub gamma2: Option<String>,
}

/// Failure classes mapped to exit codes.
#[derive(Debug)]
pub enum Failure {
    /// A verification or statistical check failed (exit 1).
    Check(String),
    /// Bad usage or parameters (exit 2).
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

pub type CmdResult = Result<String, Failure>;

pub fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

pub fn output_path(p: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    if let Some(path) = p {
        std::fs::write(path, text)?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = init_precision_from_env() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let result = match &cli.command {
        Command::Mvop(a) => mvop::run(a, cli.format),
        Command::Law(a) => law::run(a, cli.format),
        Command::Verify(a) => verify::run(a, cli.format),
        Command::Sample(a) => mc::run_sample(a, cli.format),
        Command::Kstest(a) => mc::run_kstest(a, cli.format),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check(text)) => {
            print!("{text}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
