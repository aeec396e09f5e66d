//! Argument grammar for the `metridim` binary.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(
    name = "metridim",
    about = "Metric dimension of graphs: solvers, random-graph predictions, and experiment sweeps",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a graph and emit it in edge-list format.
    Gen(GenArgs),
    /// Check whether a landmark set resolves a graph.
    Verify(VerifyArgs),
    /// Compute or approximate the metric dimension of a graph.
    Solve(SolveArgs),
    /// Print regime parameters and predicted beta bounds for (n, p).
    Predict(PredictArgs),
    /// Run a seeded (n, p)-grid experiment and write one CSV row per trial.
    Sweep(SweepArgs),
    /// Measure sphere-size concentration on sparse G(n, p) samples.
    Expansion(ExpansionArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Gnp,
    Path,
    Cycle,
    Complete,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "gnp")]
    pub family: Family,
    /// Edge probability (required for --family gnp).
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Input graph in edge-list format.
    #[arg(long)]
    pub input: PathBuf,
    /// Comma-separated landmark ids, e.g. "0,5,9".
    #[arg(long)]
    pub set: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algo {
    Exact,
    Exhaustive,
    Greedy,
    Random,
    Topdeg,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[arg(long, value_enum)]
    pub algo: Algo,
    #[arg(long)]
    pub input: PathBuf,
    /// Subset size for --algo random; derived from the edge density via the
    /// (2+eps) ln n / ln(1/q) formula when omitted.
    #[arg(long)]
    pub w: Option<usize>,
    /// Landmark count for --algo topdeg; defaults to ceil(3 ln n / ln 2).
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, default_value_t = 0.5)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 1)]
    pub max_attempts: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Node cap for the branch-and-bound search.
    #[arg(long)]
    pub node_cap: Option<u64>,
    /// Wall-clock cap in milliseconds for the branch-and-bound search.
    #[arg(long)]
    pub time_cap_ms: Option<u64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct PredictArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub p: f64,
    #[arg(long, default_value_t = 0.5)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 0.0)]
    pub margin: f64,
    /// Case threshold between the matched-bound and gap regimes.
    #[arg(long, default_value_t = 10.0)]
    pub c0: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(long)]
    pub n: usize,
    /// Exponent grid start:stop:step with p = n^(x-1), x in (0, 1].
    #[arg(long)]
    pub x_grid: String,
    #[arg(long)]
    pub trials: u32,
    /// Comma-separated algorithms to run per trial (greedy, random).
    #[arg(long, default_value = "greedy,random")]
    pub algos: String,
    #[arg(long, default_value_t = 0)]
    pub master_seed: u64,
    #[arg(long, default_value_t = 0.5)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 1)]
    pub max_attempts: u64,
    /// Record wall-clock per trial in the runtime_ms column. Off by default
    /// so that repeated runs with one master seed are byte-identical.
    #[arg(long)]
    pub timings: bool,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Args, Debug)]
pub struct ExpansionArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub p: f64,
    /// Largest sphere radius to measure.
    #[arg(long)]
    pub radius: u32,
    #[arg(long)]
    pub trials: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Landmark-set size: 0 measures plain spheres, > 0 measures spheres
    /// with the landmark ball removed.
    #[arg(long, default_value_t = 0)]
    pub r_size: usize,
    /// Subjects sampled per trial (default min(n, 200)).
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long)]
    pub out: PathBuf,
}
