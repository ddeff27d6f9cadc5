//! Command-line front end: verification suites, depth-reduction records,
//! `r_m`, alternating MZV values and operator coefficients.

pub mod commands;
pub mod config;
pub mod emit;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use config::{Format, RunConfig, Settings, Suite};
pub use emit::IdentityRecord;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, config or parameters: exit 2.
    #[error("{0}")]
    Usage(String),
    /// A check or a computation failed: exit 1.
    #[error("{0}")]
    Failure(String),
    #[error("output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) | CliError::Io(_) => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "zetaops", version, about = "Depth reduction for alternating multiple zeta values")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Truncation order in x.
    #[arg(long, global = true)]
    pub order: Option<usize>,
    /// Degree of the generic test function.
    #[arg(long, global = true)]
    pub degree: Option<u32>,
    /// Symmetric s-window: exponents −W..W are kept.
    #[arg(long, global = true)]
    pub window: Option<i32>,
    /// Zeta weight cap.
    #[arg(long, global = true)]
    pub weight: Option<u32>,
    /// Decimal digits for numerics.
    #[arg(long, global = true)]
    pub digits: Option<u32>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Rewrite ζ(2k) as rational multiples of ζ(2)^k.
    #[arg(long, global = true)]
    pub normalize_even: bool,
    /// key=value file with defaults for any of the flags.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    D1,
    D2,
    D3,
    L1,
    L2,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run verification checks; one report per line.
    Verify {
        #[arg(long, value_enum)]
        suite: Option<Suite>,
        #[arg(long)]
        kmax: Option<u32>,
        #[arg(long)]
        mmax: Option<u32>,
        /// Randomized trials per lemma.
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Emit the identity for ζ({1}^k, 2m̄).
    Reduce {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        m: u32,
    },
    /// The rational coefficients r_1..r_max.
    Rm {
        #[arg(long)]
        max: u32,
    },
    /// Evaluate an alternating MZV; "1,1,-2" is ζ(1,1,2̄).
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        index: String,
    },
    /// Print the x^order coefficient of an operator.
    Operator {
        #[arg(long, value_enum)]
        which: Which,
    },
}

impl Cli {
    /// Flags over config file over defaults.
    pub fn settings(&self) -> Result<Settings, CliError> {
        let g = &self.global;
        let mut s = Settings {
            order: g.order,
            degree: g.degree,
            window: g.window,
            weight: g.weight,
            digits: g.digits,
            format: g.format,
            normalize_even: g.normalize_even.then_some(true),
            ..Settings::default()
        };
        if let Command::Verify { suite, kmax, mmax, trials, seed } = &self.command {
            s.suite = *suite;
            s.kmax = *kmax;
            s.mmax = *mmax;
            s.trials = *trials;
            s.seed = *seed;
        }
        match &g.config {
            Some(p) => Ok(s.over(Settings::load(p)?)),
            None => Ok(s),
        }
    }
}

/// Runs one command, writing to `out`. `Ok(false)` means a check failed.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<bool, CliError> {
    let cfg = RunConfig::resolve(cli.settings()?)?;
    match &cli.command {
        Command::Verify { .. } => commands::verify(&cfg, out),
        Command::Reduce { k, m } => commands::reduce(*k, *m, &cfg, out),
        Command::Rm { max } => commands::rm(*max, &cfg, out),
        Command::Eval { index } => commands::eval(index, &cfg, out),
        Command::Operator { which } => commands::operator(*which, &cfg, out),
    }
}
