//! Command-line front-end for `fusionkit`.
//!
//! [`run`] turns parsed arguments into the text that `main` prints or
//! writes to `--out`, together with the exit status.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
pub mod render;

pub use commands::import_fusion_tensor;

#[derive(Debug, Parser)]
#[command(name = "fusionkit", version, about = "Modular and fusion data of SU(n)_k and the twisted NIM-rep of SU(3)_k")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the integrable weights with conformal weights and dimensions.
    Reps(Common),
    /// Print S, T, quantum dimensions, Gauss sum and central charge mod 8.
    Modular(Common),
    /// Print the Verlinde fusion tensor.
    Fusion(Common),
    /// Count twisted solitons and list the sectors of the Z2 orbifold.
    Twisted(Common),
    /// Solve for the twisted NIM-rep of SU(3)_k.
    Nimrep(NimrepArgs),
    /// Soliton dimensions and indices of SU(3)_k.
    Indices(Common),
    /// Run every invariant check and exit non-zero on failure.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Rank parameter of SU(n).
    #[arg(long)]
    pub n: usize,
    /// Level k.
    #[arg(long)]
    pub level: u32,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[arg(long, default_value_t = 1e-8)]
    pub tolerance: f64,
    /// Write output to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct NimrepArgs {
    #[command(flatten)]
    pub common: Common,
    /// Also print N_lambda for every weight.
    #[arg(long)]
    pub all: bool,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: Common,
    /// Check this exported fusion tensor (JSON) instead of recomputing it.
    #[arg(long)]
    pub fusion_input: Option<PathBuf>,
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Command::Reps(c)
            | Command::Modular(c)
            | Command::Fusion(c)
            | Command::Twisted(c)
            | Command::Indices(c) => c,
            Command::Nimrep(a) => &a.common,
            Command::Verify(a) => &a.common,
        }
    }
}

/// Exit status of a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    Failed = 1,
    Usage = 2,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub status: Status,
    pub output: String,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failed(String),
}

impl From<fusionkit::Error> for CliError {
    fn from(e: fusionkit::Error) -> Self {
        CliError::Failed(e.to_string())
    }
}

/// Runs a parsed command. Errors carry the message for stderr.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let c = cli.command.common();
    if c.n < 2 || c.level < 1 {
        return Err(CliError::Usage(format!("need --n >= 2 and --level >= 1, got n={} level={}", c.n, c.level)));
    }
    if c.tolerance.is_nan() || c.tolerance <= 0.0 {
        return Err(CliError::Usage("--tolerance must be positive".into()));
    }
    let needs_su3 = matches!(cli.command, Command::Nimrep(_) | Command::Indices(_));
    if needs_su3 && c.n != 3 {
        return Err(CliError::Usage(format!("this command requires --n 3, got --n {}", c.n)));
    }
    match &cli.command {
        Command::Reps(c) => commands::reps(c),
        Command::Modular(c) => commands::modular(c),
        Command::Fusion(c) => commands::fusion(c),
        Command::Twisted(c) => commands::twisted(c),
        Command::Nimrep(a) => commands::nimrep(&a.common, a.all),
        Command::Indices(c) => commands::indices(c),
        Command::Verify(a) => commands::verify(&a.common, a.fusion_input.as_deref()),
    }
}
