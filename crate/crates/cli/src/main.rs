use std::fs;
use std::io::Write;
use std::num::NonZeroUsize;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod family;
mod render;

/// An invalid flag value or parameter combination. Reported on stderr with
/// exit status 2, before any computation starts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Parser)]
#[command(name = "stabprod")]
#[command(about = "Difference operators on products of stabilizing Schur-function sequences")]
#[command(version)]
struct Cli {
    /// Report format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the report to this file instead of standard output
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Worker threads for verification grids (default: logical cores)
    #[arg(long, global = true)]
    jobs: Option<NonZeroUsize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply Schur functions, or evaluate a sequence family at one index
    Product(ProductArgs),
    /// Evaluate a composite difference operator on a family at one index
    ApplyDelta(ApplyDeltaArgs),
    /// Enumerate the lattice points of the tableau polytope
    EnumeratePolytope(PolytopeArgs),
    /// Check a vanishing or counting claim over one instance or a grid
    Verify(VerifyArgs),
    /// Gather evidence for the fourfold-product statement
    ExploreConjecture(ConjectureArgs),
}

#[derive(Args)]
pub struct ProductArgs {
    /// Partitions to multiply, separated by ';' (e.g. "2,1;1,1")
    #[arg(long, conflicts_with_all = ["seq", "n"], required_unless_present = "seq")]
    pub factors: Option<String>,

    /// Sequence specifier (hom:…, hook:…, border:…)
    #[arg(long, requires = "n")]
    pub seq: Option<String>,

    /// Index at which to evaluate --seq
    #[arg(long, requires = "seq")]
    pub n: Option<u32>,
}

#[derive(Args)]
pub struct ApplyDeltaArgs {
    /// Operators as "m|λ" separated by ';' (e.g. "2|(2) ; 1|(1,1)")
    #[arg(long)]
    pub ops: String,

    /// Sequence specifier (hom:…, hook:…, border:…)
    #[arg(long)]
    pub seq: String,

    /// Index at which the composite is evaluated
    #[arg(long)]
    pub n: u32,
}

#[derive(Args)]
pub struct PolytopeArgs {
    /// Number of rows
    #[arg(long)]
    pub k: usize,

    #[arg(long)]
    pub n: u32,

    /// Weakly decreasing, k entries (default: all zero)
    #[arg(long)]
    pub alpha: Option<String>,

    /// Restrict to these faces, comma-separated (D1K, D21, D211_SECOND, D22)
    #[arg(long)]
    pub face: Option<String>,

    /// Include every point in the report
    #[arg(long)]
    pub points: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Claim {
    /// Two hook factors under Δ^(2) Δ^(1,1)
    Pair,
    /// Three hook factors under the four triple operators
    Triple,
    /// Products of two or three stabilizing sequences
    Corollary,
    /// Four factors under the nine fourfold operators
    Conjecture,
    /// Closed form left by three of the triple operators
    Residual,
    /// Multiplicity count of s_(2n+|α|, n)
    Multiplicity,
}

#[derive(Args)]
pub struct VerifyArgs {
    pub claim: Claim,

    /// α; several values separated by ';' form a grid
    #[arg(long)]
    pub alpha: Option<String>,

    /// λ1; several values separated by ';' form a grid ("-" is empty)
    #[arg(long, allow_hyphen_values = true)]
    pub lambda1: Option<String>,

    #[arg(long, allow_hyphen_values = true)]
    pub lambda2: Option<String>,

    #[arg(long, allow_hyphen_values = true)]
    pub lambda3: Option<String>,

    #[arg(long, allow_hyphen_values = true)]
    pub lambda4: Option<String>,

    /// Let every λ not given explicitly range over all partitions up to this weight
    #[arg(long)]
    pub grid_weight: Option<u32>,

    /// Last index evaluated (default: the bound plus the window)
    #[arg(long)]
    pub n_max: Option<u32>,

    /// Width of the minimality window
    #[arg(long, default_value_t = stabprod::verify::DEFAULT_WINDOW)]
    pub window: u32,

    /// Indices for residual and multiplicity, comma-separated
    #[arg(long)]
    pub n: Option<String>,

    /// Corollary input "SPEC@N": a slope-1 family declared stable from N on
    #[arg(long)]
    pub input: Vec<String>,
}

#[derive(Args)]
pub struct ConjectureArgs {
    /// Four weakly decreasing entries
    #[arg(long)]
    pub alpha: String,

    /// Four partitions separated by '|' (default: one-row factors)
    #[arg(long, allow_hyphen_values = true)]
    pub lambdas: Option<String>,

    #[arg(long, default_value_t = 12)]
    pub n_max: u32,

    #[arg(long, default_value_t = stabprod::verify::DEFAULT_WINDOW)]
    pub window: u32,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let jobs = cli
        .jobs
        .or_else(|| std::thread::available_parallelism().ok())
        .map_or(1, NonZeroUsize::get);
    let result = match &cli.command {
        Command::Product(a) => commands::product(a),
        Command::ApplyDelta(a) => commands::apply_delta(a),
        Command::EnumeratePolytope(a) => commands::enumerate_polytope(a),
        Command::Verify(a) => commands::verify(a, jobs),
        Command::ExploreConjecture(a) => commands::explore_conjecture(a),
    };
    let outcome = match result {
        Ok(o) => o,
        Err(commands::Failure::Usage(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
        Err(commands::Failure::Compute(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let body = match cli.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&outcome.json).expect("JSON values always serialize");
            s.push('\n');
            s
        }
        Format::Text => outcome.text,
    };
    let written = match &cli.output {
        Some(path) => fs::write(path, body.as_bytes()).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => std::io::stdout()
            .lock()
            .write_all(body.as_bytes())
            .map_err(|e| format!("cannot write report: {e}")),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    if outcome.success {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
