mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pentagon::pentagon::Property;

/// Verify, classify and enumerate solutions of the pentagon equation on
/// finite semigroups.
#[derive(Debug, Parser)]
#[command(name = "pentagon", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write results to this file instead of standard output.
    #[arg(long, short, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,
    /// Worker threads for searches.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub workers: u16,
}

#[derive(Debug, Args)]
pub struct SolutionInput {
    /// Cayley table file (`n [identity]` then n rows).
    #[arg(long, value_name = "PATH", requires = "theta", conflicts_with = "solution")]
    pub table: Option<PathBuf>,
    /// θ-table file (`n` then n rows, row x holding θ_x).
    #[arg(long, value_name = "PATH", requires = "table")]
    pub theta: Option<PathBuf>,
    /// Serialized solution file.
    #[arg(long, value_name = "PATH", required_unless_present = "table")]
    pub solution: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check (P1) and (P2) and report idempotency and non-degeneracy.
    Verify(SolutionInput),
    /// Print every classification flag of a solution.
    Classify(SolutionInput),
    /// List the solutions on one semigroup.
    Enumerate {
        #[arg(long, value_name = "PATH")]
        table: PathBuf,
        /// Required properties, comma separated.
        #[arg(long, value_delimiter = ',', value_parser = parse_property)]
        filter: Vec<Property>,
        /// One solution per isomorphism class.
        #[arg(long)]
        up_to_iso: bool,
        /// Permit tables above the default order cap.
        #[arg(long)]
        allow_large: bool,
    },
    /// Solutions on every semigroup of one order, up to isomorphism.
    Census {
        #[arg(long, default_value_t = 3)]
        order: usize,
        /// Permit orders above 3.
        #[arg(long)]
        allow_large: bool,
    },
    /// Build a solution from group or monoid construction data.
    Construct {
        #[arg(long, value_name = "PATH")]
        table: PathBuf,
        #[arg(long, value_name = "PATH")]
        data: PathBuf,
    },
    /// Look for an isomorphism between two serialized solutions.
    Iso {
        #[arg(value_name = "LEFT")]
        left: PathBuf,
        #[arg(value_name = "RIGHT")]
        right: PathBuf,
    },
    /// Run the property catalog on all small semigroups or on given input.
    Lab {
        /// Largest order of the generated instances.
        #[arg(long, default_value_t = 3, conflicts_with = "table")]
        max_order: usize,
        /// Check a single semigroup (and all its solutions) instead.
        #[arg(long, value_name = "PATH")]
        table: Option<PathBuf>,
        /// Check a single solution on `--table`.
        #[arg(long, value_name = "PATH", requires = "table")]
        theta: Option<PathBuf>,
        /// Also corrupt solutions and record whether each case notices.
        #[arg(long)]
        mutation: bool,
        /// Print only the one-line-per-case summary.
        #[arg(long)]
        summary: bool,
    },
}

fn parse_property(s: &str) -> Result<Property, String> {
    s.parse()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    ExitCode::from(commands::run(&cli))
}
