//! `fenceq` command-line interface.
//!
//! Every command prints JSON lines on stdout; `--pretty` renders tables
//! instead. Exit codes: 0 ok, 2 input error, 3 construction error,
//! 4 invariant breach (including a failed theorem scan or golden fixture).

mod commands;
mod error;
mod pretty;

use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "fenceq",
    version,
    about = "Rank polynomials of fence posets and c-polynomials of polygon arcs"
)]
pub struct Cli {
    /// Render human-readable tables instead of JSON lines.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Plain,
    Circular,
    NotchedFirst,
    NotchedLast,
    NotchedBoth,
    /// Plain fence with the extra relation `x_i < x_j` (needs `--i` and `--j`).
    Ij,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Planner {
    Greedy,
    AlongArc,
    Random,
}

/// Where to read an instance from.
#[derive(clap::Args, Clone, Debug)]
pub struct InstanceInput {
    /// JSON file with `triangulation`, `laminations` and `arc`; `-` reads stdin.
    #[arg(long, conflicts_with = "json")]
    input: Option<PathBuf>,
    /// The instance JSON given inline.
    #[arg(long)]
    json: Option<String>,
}

#[derive(Subcommand)]
pub enum Command {
    /// Rank polynomial of a fence poset and its sequence report.
    Rank {
        /// Composition, e.g. `2,2,2,2` (a leading 0 part is allowed).
        #[arg(long)]
        alpha: String,
        #[arg(long, value_enum, default_value = "plain")]
        variant: Variant,
        #[arg(long, allow_hyphen_values = true)]
        i: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        j: Option<i64>,
    },
    /// c-polynomial of an arc for a triangulation with laminations.
    Cpoly {
        #[command(flatten)]
        source: InstanceInput,
        #[arg(long, value_enum, default_value = "greedy")]
        planner: Planner,
        /// Seed for the random planner.
        #[arg(long, default_value_t = 0)]
        planner_seed: u64,
    },
    /// F-polynomial of an arc with every coefficient variable set to q.
    Fpoly {
        #[command(flatten)]
        source: InstanceInput,
    },
    /// Fence poset of an arc, its rank polynomial and the F-polynomial check.
    ArcPoset {
        #[command(flatten)]
        source: InstanceInput,
    },
    /// Decomposition identities of last-notched fences.
    VerifyIdentities {
        /// A single composition.
        #[arg(long, conflicts_with = "n")]
        alpha: Option<String>,
        /// Every composition with size in the inclusive range, e.g. `3..10`.
        #[arg(long, value_parser = parse_range)]
        n: Option<RangeInclusive<usize>>,
    },
    /// Exhaustive or sampled scan of a theorem or conjecture.
    Scan {
        #[arg(long)]
        mode: String,
        /// Inclusive size range, e.g. `5..9`, or a single size.
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        /// Random instances per size instead of exhaustive enumeration.
        #[arg(long)]
        sample_limit: Option<usize>,
        #[arg(long, default_value_t = fenceq::scan::DEFAULT_SEED)]
        seed: u64,
        /// Omit the elapsed time so output is byte-identical across runs.
        #[arg(long)]
        no_timing: bool,
        /// Print at most this many violations (all are counted).
        #[arg(long)]
        max_violations: Option<usize>,
    },
    /// Check every golden fixture.
    #[command(alias = "golden")]
    ReproducePaper,
}

/// Parses `a..b`, `a..=b` (both inclusive) or a single `a`.
fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            if a > b {
                return Err(format!("empty range {s}"));
            }
            Ok(a..=b)
        }
        None => {
            let a = num(s)?;
            Ok(a..=a)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command, cli.pretty) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("fenceq: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("5..9").unwrap(), 5..=9);
        assert_eq!(parse_range("5..=9").unwrap(), 5..=9);
        assert_eq!(parse_range("7").unwrap(), 7..=7);
        assert!(parse_range("9..5").is_err());
        assert!(parse_range("a..5").is_err());
    }

    #[test]
    fn cli_definition_is_valid() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
