//! `confluence`: generate, verify and evaluate relations among multiple
//! zeta values from the command line.

mod commands;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "confluence",
    version,
    about = "Confluence relations among multiple zeta values"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Shuffle,
    Stuffle,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Tex,
    Zeta,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Cf,
    Rds,
    Duality,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum SuiteArg {
    Algebra,
    Regularization,
    Phi,
    Numeric,
}

#[derive(Subcommand)]
enum Command {
    /// Emit one relation per convergent word of the given weight.
    Gen {
        #[arg(long)]
        weight: usize,
        #[arg(long, value_enum, default_value = "shuffle")]
        mode: ModeArg,
        /// Skip words whose relation body is zero.
        #[arg(long)]
        nonzero: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Check the weight 3 and 4 relations against the built-in reference table.
    VerifyTable,
    /// Rank of the span of a relation family at one weight.
    Rank {
        #[arg(long)]
        weight: usize,
        #[arg(long, value_enum, default_value = "cf")]
        family: FamilyArg,
    },
    /// Report whether every relation of a family lies in the confluence span.
    Member {
        #[arg(long)]
        weight: usize,
        #[arg(long, value_enum)]
        family: FamilyArg,
    },
    /// Evaluate L(w) numerically.
    Eval {
        #[arg(long)]
        word: String,
        /// Position of the puncture (real, > 1); needed for words with z.
        #[arg(long)]
        z: Option<f64>,
        #[arg(long, default_value_t = 30)]
        digits: u32,
    },
    /// Run a verification suite.
    Check {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 5)]
        max_weight: usize,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = confluence_core::checks::SuiteConfig::DEFAULT_SEED)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Gen {
            weight,
            mode,
            nonzero,
            format,
        } => commands::gen(weight, mode, nonzero, format),
        Command::VerifyTable => commands::verify_table(),
        Command::Rank { weight, family } => commands::rank(weight, family),
        Command::Member { weight, family } => commands::member(weight, family),
        Command::Eval { word, z, digits } => commands::eval(&word, z, digits),
        Command::Check {
            suite,
            max_weight,
            samples,
            seed,
        } => commands::check(suite, max_weight, samples, seed),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
