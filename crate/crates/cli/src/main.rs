//! `oddspec`: constructions, spectral certificates, cycle and density
//! analysis, extremal scans and verdicts from the command line.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on usage or
//! input errors.

mod commands;
mod input;

use clap::{Args, Parser, Subcommand};
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(
    name = "oddspec",
    version,
    about = "Spectral extremal toolkit for graphs without short odd cycles"
)]
pub struct Cli {
    /// Print a JSON record (schema 1) instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads for `scan` and `verify`; 0 uses every core.
    #[arg(long, global = true, env = "ODDSPEC_WORKERS")]
    pub workers: Option<usize>,

    /// Per-length cycle search budget.
    #[arg(long, global = true, default_value_t = oddspec_core::cycles::DEFAULT_BUDGET)]
    pub budget: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a named construction and print its graph6.
    Construct(ConstructArgs),
    /// Encode an edge list (or any graph argument) as graph6.
    Encode(EncodeArgs),
    /// Decode graph6 into an edge list.
    Decode(GraphArg),
    /// Perron certificate of the spectral radius.
    Spectrum(SpectrumArgs),
    /// Presence of every cycle length with witnesses.
    Cycles(GraphArg),
    /// Exact maximum average degree and edge-count bounds.
    Mad(MadArgs),
    /// Low-degree peeling and cut-vertex reduction.
    Peel(PeelArgs),
    /// Extremal scan over all graphs of one order or a graph6 stream.
    Scan(ScanArgs),
    /// Hill climbing on the spectral radius under cycle constraints.
    Climb(ClimbArgs),
    /// Run lemma and theorem checks.
    Verify(VerifyArgs),
    /// Certified comparison of two spectral radii.
    Compare(CompareArgs),
    /// Summarise verdict JSON lines as CSV.
    Report(ReportArgs),
}

#[derive(Args, Debug)]
pub struct GraphArg {
    /// Graph6 string, `@file.g6`, or a family such as `cycle_attached_turan:16:1`.
    #[arg(long, short = 'g')]
    pub graph: String,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    /// Family name, or a complete shorthand such as `turan:7:3`.
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub l: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    /// Part receiving the cycle: `smaller` or `larger`.
    #[arg(long)]
    pub part: Option<String>,
    /// Base graph (graph6) of a blow-up.
    #[arg(long)]
    pub base: Option<String>,
    /// Comma-separated blow-up part sizes.
    #[arg(long)]
    pub sizes: Option<String>,
}

#[derive(Args, Debug)]
pub struct EncodeArgs {
    /// Number of vertices of the edge list.
    #[arg(long, requires = "edges")]
    pub n: Option<usize>,
    /// Edges as `0-1,1-2,2-0`.
    #[arg(long, requires = "n", conflicts_with = "graph")]
    pub edges: Option<String>,
    /// Any graph argument, re-encoded.
    #[arg(long, short = 'g', required_unless_present = "edges")]
    pub graph: Option<String>,
}

#[derive(Args, Debug)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub graph: GraphArg,
    /// Width of the floating enclosure.
    #[arg(long, default_value_t = oddspec_core::spectral::DEFAULT_TOL)]
    pub tol: f64,
    /// Refine to an exact rational enclosure of at most this width.
    #[arg(long)]
    pub exact: Option<f64>,
    /// Also print the Perron vector.
    #[arg(long)]
    pub vector: bool,
}

#[derive(Args, Debug)]
pub struct MadArgs {
    #[command(flatten)]
    pub graph: GraphArg,
    /// Also test the edge-count bounds for this `k`.
    #[arg(long)]
    pub k: Option<usize>,
}

#[derive(Args, Debug)]
pub struct PeelArgs {
    #[command(flatten)]
    pub graph: GraphArg,
    /// Delete vertices of degree below this value.
    #[arg(long, default_value_t = 0.0)]
    pub threshold: f64,
    /// Then delete cut vertices until the rest is 2-connected.
    #[arg(long)]
    pub reduce: bool,
}

#[derive(Args, Debug, Clone)]
pub struct ConstraintArgs {
    /// Number of vertices.
    #[arg(long)]
    pub n: Option<usize>,
    /// Forbid `C_3, ..., C_{2l-1}` and `C_{2k+1}`; needs `--k`.
    #[arg(long, requires = "k")]
    pub l: Option<usize>,
    #[arg(long, requires = "l")]
    pub k: Option<usize>,
    /// Comma-separated odd lengths to forbid instead of `--l/--k`.
    #[arg(long, conflicts_with_all = ["l", "k"])]
    pub forbid: Option<String>,
    /// Admit bipartite graphs.
    #[arg(long)]
    pub allow_bipartite: bool,
    /// Only connected graphs.
    #[arg(long)]
    pub connected: bool,
}

#[derive(Args, Debug)]
pub struct ScanArgs {
    #[command(flatten)]
    pub constraints: ConstraintArgs,
    /// Newline-delimited graph6 stream to scan instead of enumerating.
    #[arg(long)]
    pub input: Option<String>,
    /// Resumable checkpoint file.
    #[arg(long)]
    pub checkpoint: Option<String>,
    /// Write the JSON report here.
    #[arg(long)]
    pub report: Option<String>,
    /// Write the CSV leaderboard here.
    #[arg(long)]
    pub csv: Option<String>,
}

#[derive(Args, Debug)]
pub struct ClimbArgs {
    /// Starting graph.
    #[arg(long)]
    pub seed: String,
    #[command(flatten)]
    pub constraints: ConstraintArgs,
    #[arg(long, default_value_t = 1000)]
    pub max_steps: usize,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Check ids, comma-separated or repeated; also `main_theorem`,
    /// `consecutive_cycles` and `eigenvector`.
    #[arg(long, required = true, value_delimiter = ',')]
    pub check: Vec<String>,
    /// Every graph on exactly N vertices.
    #[arg(long, conflicts_with_all = ["random", "grid", "graph"])]
    pub exhaustive: Option<usize>,
    /// COUNT seeded random instances.
    #[arg(long, conflicts_with_all = ["grid", "graph"])]
    pub random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 4)]
    pub min_n: usize,
    #[arg(long, default_value_t = 12)]
    pub max_n: usize,
    /// Construction grid `A..B`.
    #[arg(long)]
    pub grid: Option<String>,
    /// A single graph: replays one instance, or the input of
    /// `consecutive_cycles` and `eigenvector`.
    #[arg(long, short = 'g')]
    pub graph: Option<String>,
    /// Order for `main_theorem`.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub l: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Graph6 stream for `main_theorem` instead of enumeration.
    #[arg(long)]
    pub input: Option<String>,
    /// `eps` of `consecutive_cycles`.
    #[arg(long, default_value_t = 0.1)]
    pub eps: f64,
    /// Constant of the cycle range theorem used by `consecutive_cycles`.
    #[arg(long, default_value_t = 1)]
    pub k_cfg: usize,
    /// Record wall-clock time in each verdict.
    #[arg(long)]
    pub timing: bool,
    /// Append verdict JSON lines here.
    #[arg(long)]
    pub jsonl: Option<String>,
    /// Write the per-check summary CSV here.
    #[arg(long)]
    pub csv: Option<String>,
}

#[derive(Args, Debug)]
pub struct CompareArgs {
    #[arg(long)]
    pub a: String,
    #[arg(long)]
    pub b: String,
}

#[derive(Args, Debug)]
pub struct ReportArgs {
    /// Verdict JSON-lines files (`-` for standard input).
    #[arg(required = true)]
    pub inputs: Vec<String>,
    /// Write the CSV here instead of standard output.
    #[arg(long)]
    pub out: Option<String>,
}

/// Result of a command that ran to completion.
pub enum Status {
    Success,
    VerificationFailed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(Status::Success) => ExitCode::SUCCESS,
        Ok(Status::VerificationFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
