//! Subcommand implementations. Every command prints JSON to stdout (or
//! `--out`) except `gen`, whose artifact is the edge list itself, and the
//! CSV-producing commands, which write the CSV to `--out` and a JSON summary
//! to stdout.

use std::path::{Path, PathBuf};
use std::time::Duration;

use serde::Serialize;

use metridim_core::{
    compute_regime, exact_beta, exhaustive_beta, expansion_report, gnp_checked, greedy_resolving,
    io as graph_io, is_resolving, predict_beta, random_resolving, topdeg_default_k,
    topdeg_resolving, Budget, ExpansionParams, Graph, PredictConfig, RandomOutcome, SolveResult,
    TopDegOutcome, Vertex,
};

use crate::cli::{
    Algo, Command, ExpansionArgs, Family, GenArgs, PredictArgs, SolveArgs, SweepArgs, VerifyArgs,
};
use crate::sweep::{run_sweep, AlgoSet, SweepParams};
use crate::{CliError, CliResult};

pub fn run(command: Command) -> CliResult<()> {
    match command {
        Command::Gen(args) => gen(args),
        Command::Verify(args) => verify(args),
        Command::Solve(args) => solve(args),
        Command::Predict(args) => predict(args),
        Command::Sweep(args) => sweep(args),
        Command::Expansion(args) => expansion(args),
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn emit_json<T: Serialize>(out: &Option<PathBuf>, value: &T) -> CliResult<()> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Io(format!("serializing output: {e}")))?;
    text.push('\n');
    emit(out, &text)
}

fn load_graph(path: &Path) -> CliResult<Graph> {
    Ok(graph_io::read_edge_list(path)?)
}

fn gen(args: GenArgs) -> CliResult<()> {
    let graph = match args.family {
        Family::Gnp => {
            let p = args
                .p
                .ok_or_else(|| CliError::Usage("--family gnp requires --p".into()))?;
            gnp_checked(args.n, p, args.seed)?
        }
        Family::Path => metridim_core::path(args.n)?,
        Family::Cycle => metridim_core::cycle(args.n)?,
        Family::Complete => metridim_core::complete(args.n)?,
    };
    emit(&args.out, &graph_io::format_edge_list(&graph))
}

#[derive(Serialize)]
struct VerifyOutput {
    resolving: bool,
    witness: Option<(Vertex, Vertex)>,
}

fn parse_set(text: &str) -> CliResult<Vec<Vertex>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<Vertex>()
                .map_err(|e| CliError::Usage(format!("bad vertex id '{s}': {e}")))
        })
        .collect()
}

fn verify(args: VerifyArgs) -> CliResult<()> {
    let g = load_graph(&args.input)?;
    let set = parse_set(&args.set)?;
    if set.is_empty() {
        return Err(CliError::Usage(
            "--set must name at least one vertex".into(),
        ));
    }
    let res = is_resolving(&g, &set)?;
    emit_json(
        &args.out,
        &VerifyOutput {
            resolving: res.resolving,
            witness: res.witness,
        },
    )
}

#[derive(Serialize)]
struct SolveOutput {
    algo: &'static str,
    found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    beta_estimate: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<Vertex>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certified: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    nodes_explored: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<f64>,
    /// For random: attempts consumed without success.
    #[serde(skip_serializing_if = "Option::is_none")]
    attempts: Option<u64>,
    /// For topdeg: the selected set and the unresolved pair on failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    selected: Option<Vec<Vertex>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    unresolved_pair: Option<(Vertex, Vertex)>,
}

impl SolveOutput {
    fn from_result(algo: &'static str, res: &SolveResult) -> Self {
        SolveOutput {
            algo,
            found: true,
            beta_estimate: Some(res.beta_estimate),
            witness: Some(res.witness.clone()),
            certified: Some(res.certified),
            nodes_explored: Some(res.nodes_explored),
            elapsed_ms: Some(res.elapsed.as_secs_f64() * 1e3),
            attempts: None,
            selected: None,
            unresolved_pair: None,
        }
    }

    fn not_found(algo: &'static str) -> Self {
        SolveOutput {
            algo,
            found: false,
            beta_estimate: None,
            witness: None,
            certified: None,
            nodes_explored: None,
            elapsed_ms: None,
            attempts: None,
            selected: None,
            unresolved_pair: None,
        }
    }
}

/// Sampling size from the (2+eps) ln n / ln(1/q) formula, with q estimated
/// from the input graph's edge density.
fn derive_w(g: &Graph, epsilon: f64) -> CliResult<usize> {
    let n = g.n();
    let pairs = n * (n - 1) / 2;
    let p_hat = g.m() as f64 / pairs as f64;
    let regime = compute_regime(n, p_hat).map_err(|e| {
        CliError::Usage(format!(
            "cannot derive --w from edge density {p_hat}: {e}; pass --w explicitly"
        ))
    })?;
    let raw = ((2.0 + epsilon) * (n as f64).ln() / (1.0 / regime.q).ln()).ceil();
    Ok((raw as usize).clamp(1, n - 1))
}

fn solve(args: SolveArgs) -> CliResult<()> {
    let g = load_graph(&args.input)?;
    let output = match args.algo {
        Algo::Exact => {
            let budget = Budget {
                node_cap: args.node_cap,
                time_cap: args.time_cap_ms.map(Duration::from_millis),
            };
            SolveOutput::from_result("exact", &exact_beta(&g, &budget)?)
        }
        Algo::Exhaustive => SolveOutput::from_result("exhaustive", &exhaustive_beta(&g)?),
        Algo::Greedy => SolveOutput::from_result("greedy", &greedy_resolving(&g)?),
        Algo::Random => {
            let w = match args.w {
                Some(w) => w,
                None => derive_w(&g, args.epsilon)?,
            };
            match random_resolving(&g, w, args.max_attempts, args.seed)? {
                RandomOutcome::Found(res) => SolveOutput::from_result("random", &res),
                RandomOutcome::NotFound { attempts } => SolveOutput {
                    attempts: Some(attempts),
                    ..SolveOutput::not_found("random")
                },
            }
        }
        Algo::Topdeg => {
            let k = args.k.unwrap_or_else(|| topdeg_default_k(g.n()));
            match topdeg_resolving(&g, k)? {
                TopDegOutcome::Resolving(res) => SolveOutput::from_result("topdeg", &res),
                TopDegOutcome::NotResolving { selected, witness } => SolveOutput {
                    selected: Some(selected),
                    unresolved_pair: Some(witness),
                    ..SolveOutput::not_found("topdeg")
                },
            }
        }
    };
    emit_json(&args.out, &output)
}

#[derive(Serialize)]
struct PredictOutput {
    regime: metridim_core::Regime,
    prediction: metridim_core::Prediction,
}

fn predict(args: PredictArgs) -> CliResult<()> {
    let regime = compute_regime(args.n, args.p)?;
    let cfg = PredictConfig {
        c0: args.c0,
        epsilon: args.epsilon,
        margin: args.margin,
    };
    let prediction = predict_beta(&regime, &cfg)?;
    emit_json(&args.out, &PredictOutput { regime, prediction })
}

fn parse_x_grid(spec: &str) -> CliResult<(f64, f64, f64)> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(CliError::Usage(format!(
            "--x-grid expects start:stop:step, got '{spec}'"
        )));
    }
    let nums: Vec<f64> = parts
        .iter()
        .map(|s| {
            s.parse::<f64>()
                .map_err(|e| CliError::Usage(format!("bad grid number '{s}': {e}")))
        })
        .collect::<CliResult<_>>()?;
    Ok((nums[0], nums[1], nums[2]))
}

fn sweep(args: SweepArgs) -> CliResult<()> {
    let (x_start, x_stop, x_step) = parse_x_grid(&args.x_grid)?;
    let params = SweepParams {
        n: args.n,
        x_start,
        x_stop,
        x_step,
        trials: args.trials,
        algos: AlgoSet::parse(&args.algos)?,
        master_seed: args.master_seed,
        epsilon: args.epsilon,
        max_attempts: args.max_attempts,
        timings: args.timings,
    };
    let summary = run_sweep(&params, &args.out)?;
    emit_json(&None, &summary)
}

#[derive(Serialize)]
struct ExpansionSummary {
    n: usize,
    p: f64,
    d: f64,
    r_size: usize,
    records: usize,
    max_abs_rel_error_by_radius: Vec<f64>,
    trials: Vec<ExpansionTrialSummary>,
    warnings: Vec<String>,
}

#[derive(Serialize)]
struct ExpansionTrialSummary {
    trial: u32,
    seed: u64,
    connected: bool,
    max_abs_rel_error: Vec<f64>,
}

pub const EXPANSION_CSV_HEADER: &str = "trial,seed,vertex,radius,sphere_size,predicted,rel_error";

fn expansion(args: ExpansionArgs) -> CliResult<()> {
    let params = ExpansionParams {
        n: args.n,
        p: args.p,
        max_radius: args.radius,
        trials: args.trials,
        master_seed: args.seed,
        r_size: args.r_size,
        samples_per_trial: args.samples,
    };
    let report = expansion_report(&params)?;

    let mut csv = String::with_capacity(report.records.len() * 48 + 64);
    csv.push_str(EXPANSION_CSV_HEADER);
    csv.push('\n');
    for rec in &report.records {
        csv.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            rec.trial,
            rec.seed,
            rec.vertex,
            rec.radius,
            rec.sphere_size,
            rec.predicted,
            rec.rel_error
        ));
    }
    std::fs::write(&args.out, csv)?;

    let summary = ExpansionSummary {
        n: report.n,
        p: report.p,
        d: report.d,
        r_size: report.r_size,
        records: report.records.len(),
        max_abs_rel_error_by_radius: report.max_abs_rel_error_by_radius.clone(),
        trials: report
            .trials
            .iter()
            .map(|t| ExpansionTrialSummary {
                trial: t.trial,
                seed: t.seed,
                connected: t.connected,
                max_abs_rel_error: t.max_abs_rel_error.clone(),
            })
            .collect(),
        warnings: report.warnings.clone(),
    };
    emit_json(&None, &summary)
}
