//! Deterministic multi-trial sweep over an exponent grid.
//!
//! For each grid point x the edge probability is p = n^(x-1), and each
//! (point, trial) job derives its seeds from the master seed by index, so
//! the entire CSV is a pure function of the parameters and the master seed
//! regardless of worker scheduling. Jobs run on a rayon pool whose size the
//! `METRIDIM_THREADS` environment variable caps.
//!
//! Column order is frozen (see [`CSV_HEADER`]) and floats are written with
//! Rust's shortest round-trip formatting, so byte-level diffs of sweep
//! outputs are meaningful.

use std::io::Write;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use metridim_core::{
    compute_regime, derive_trial_seed, gnp, greedy_resolving, predict_diameter, random_resolving,
    zigzag_f, DiameterPrediction, GnpParams, RandomOutcome, Regime,
};

use crate::{CliError, CliResult};

pub const CSV_HEADER: &str =
    "n,x,p,d,i,c,q,trial,seed,beta_greedy,beta_random,w_used,diameter_empirical,diameter_predicted,runtime_ms";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlgoSet {
    pub greedy: bool,
    pub random: bool,
}

impl AlgoSet {
    pub fn parse(names: &str) -> CliResult<AlgoSet> {
        let mut set = AlgoSet {
            greedy: false,
            random: false,
        };
        for name in names.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match name {
                "greedy" => set.greedy = true,
                "random" => set.random = true,
                other => {
                    return Err(CliError::Usage(format!(
                        "unknown sweep algorithm '{other}' (expected greedy, random)"
                    )))
                }
            }
        }
        if !set.greedy && !set.random {
            return Err(CliError::Usage("no sweep algorithms selected".into()));
        }
        Ok(set)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SweepParams {
    pub n: usize,
    pub x_start: f64,
    pub x_stop: f64,
    pub x_step: f64,
    pub trials: u32,
    pub algos: AlgoSet,
    pub master_seed: u64,
    /// Epsilon in the sampled-set size (2+eps) ln n / ln(1/q).
    pub epsilon: f64,
    pub max_attempts: u64,
    /// When false (the default), runtime_ms is written as 0 so repeated
    /// sweeps with one master seed produce byte-identical CSVs.
    pub timings: bool,
}

/// One emitted CSV row. beta_random is -1 when the sampler found nothing
/// (or was not requested); diameter_predicted is -1 when the threshold
/// criterion is ambiguous at margin 0.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepRecord {
    pub n: usize,
    pub x: f64,
    pub p: f64,
    pub d: f64,
    pub i: u32,
    pub c: f64,
    pub q: f64,
    pub trial: u32,
    pub seed: u64,
    pub beta_greedy: i64,
    pub beta_random: i64,
    pub w_used: usize,
    pub diameter_empirical: u32,
    pub diameter_predicted: i64,
    pub runtime_ms: u64,
}

impl SweepRecord {
    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.x,
            self.p,
            self.d,
            self.i,
            self.c,
            self.q,
            self.trial,
            self.seed,
            self.beta_greedy,
            self.beta_random,
            self.w_used,
            self.diameter_empirical,
            self.diameter_predicted,
            self.runtime_ms
        )
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PointSummary {
    pub x: f64,
    pub p: f64,
    pub rows: usize,
    pub skipped: usize,
    pub mean_log_n_beta_greedy: Option<f64>,
    pub mean_log_n_beta_random: Option<f64>,
    /// Predicted asymptotic exponent 1 - x * floor(1/x) for reference.
    pub zigzag_f: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepSummary {
    pub n: usize,
    pub trials: u32,
    pub master_seed: u64,
    pub records: usize,
    pub skipped: Vec<String>,
    pub points: Vec<PointSummary>,
}

enum TrialOutput {
    Row(Box<SweepRecord>),
    Skipped(String),
}

/// Runs the sweep and writes the CSV to `out_path`. The returned summary
/// reports mean log_n(beta) per grid point.
pub fn run_sweep(params: &SweepParams, out_path: &Path) -> CliResult<SweepSummary> {
    validate(params)?;
    let grid = grid_points(params);
    let jobs: Vec<(usize, u32)> = (0..grid.len())
        .flat_map(|pi| (0..params.trials).map(move |t| (pi, t)))
        .collect();

    let outputs: Vec<TrialOutput> = with_thread_cap(|| {
        jobs.par_iter()
            .map(|&(point_idx, trial)| run_trial(params, &grid, point_idx, trial))
            .collect()
    });

    let mut csv = String::with_capacity(outputs.len() * 96 + 128);
    csv.push_str(CSV_HEADER);
    csv.push('\n');
    let mut rows_by_point: Vec<Vec<&SweepRecord>> = vec![Vec::new(); grid.len()];
    let mut total_rows = 0usize;
    let mut skipped = Vec::new();
    for (job, out) in outputs.iter().enumerate() {
        match out {
            TrialOutput::Row(row) => {
                csv.push_str(&row.csv_row());
                csv.push('\n');
                rows_by_point[jobs[job].0].push(row);
                total_rows += 1;
            }
            TrialOutput::Skipped(reason) => skipped.push(reason.clone()),
        }
    }

    let mut file = std::fs::File::create(out_path)?;
    file.write_all(csv.as_bytes())?;

    let ln_n = (params.n as f64).ln();
    let mean_of = |vals: Vec<f64>| {
        if vals.is_empty() {
            None
        } else {
            Some(vals.iter().sum::<f64>() / vals.len() as f64)
        }
    };
    let points = grid
        .iter()
        .zip(&rows_by_point)
        .map(|(gp, point_rows)| PointSummary {
            x: gp.x,
            p: gp.p,
            rows: point_rows.len(),
            skipped: params.trials as usize - point_rows.len(),
            mean_log_n_beta_greedy: mean_of(
                point_rows
                    .iter()
                    .filter(|r| r.beta_greedy > 0)
                    .map(|r| (r.beta_greedy as f64).ln() / ln_n)
                    .collect(),
            ),
            mean_log_n_beta_random: mean_of(
                point_rows
                    .iter()
                    .filter(|r| r.beta_random > 0)
                    .map(|r| (r.beta_random as f64).ln() / ln_n)
                    .collect(),
            ),
            zigzag_f: zigzag_f(gp.x).expect("grid validated"),
        })
        .collect();

    Ok(SweepSummary {
        n: params.n,
        trials: params.trials,
        master_seed: params.master_seed,
        records: total_rows,
        skipped,
        points,
    })
}

struct GridPoint {
    x: f64,
    p: f64,
}

fn validate(params: &SweepParams) -> CliResult<()> {
    let ok_grid = params.x_start > 0.0
        && params.x_start <= params.x_stop
        && params.x_stop <= 1.0
        && params.x_step > 0.0;
    if !ok_grid {
        return Err(CliError::Usage(format!(
            "x grid {}:{}:{} outside (0, 1]",
            params.x_start, params.x_stop, params.x_step
        )));
    }
    if params.trials == 0 {
        return Err(CliError::Usage("trials must be >= 1".into()));
    }
    if params.n < 2 {
        return Err(CliError::Usage(format!("n = {} too small", params.n)));
    }
    if params.epsilon.is_nan() || params.epsilon <= 0.0 {
        return Err(CliError::Usage(format!(
            "epsilon = {} must be positive",
            params.epsilon
        )));
    }
    Ok(())
}

fn grid_points(params: &SweepParams) -> Vec<GridPoint> {
    let mut points = Vec::new();
    let mut k = 0u32;
    loop {
        let raw = params.x_start + f64::from(k) * params.x_step;
        if raw > params.x_stop + 1e-9 {
            break;
        }
        // Round to 1e-12 so accumulated step error never leaks into output.
        let x = (raw * 1e12).round() / 1e12;
        let p = (params.n as f64).powf(x - 1.0);
        points.push(GridPoint { x, p });
        k += 1;
    }
    points
}

fn with_thread_cap<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    match std::env::var("METRIDIM_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&t| t > 0)
    {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

fn run_trial(
    params: &SweepParams,
    grid: &[GridPoint],
    point_idx: usize,
    trial: u32,
) -> TrialOutput {
    let start = Instant::now();
    let gp = &grid[point_idx];
    let job_index = point_idx as u64 * u64::from(params.trials) + u64::from(trial);
    let trial_master = derive_trial_seed(params.master_seed, job_index);
    let graph_seed = derive_trial_seed(trial_master, 0);
    let sampler_seed = derive_trial_seed(trial_master, 1);

    let label = format!("x={} trial={}", gp.x, trial);
    let gnp_params = match GnpParams::new(params.n, gp.p, graph_seed) {
        Ok(p) => p,
        Err(e) => return TrialOutput::Skipped(format!("{label}: {e}")),
    };
    let g = gnp(gnp_params);
    if !g.is_connected() {
        return TrialOutput::Skipped(format!("{label}: sample disconnected"));
    }
    let regime: Regime = match compute_regime(params.n, gp.p) {
        Ok(r) => r,
        Err(e) => return TrialOutput::Skipped(format!("{label}: {e}")),
    };

    // Target sampled-set size from the upper-bound formula, clamped to the
    // feasible range (any (n-1)-set resolves).
    let raw_w = ((2.0 + params.epsilon) * (params.n as f64).ln() / (1.0 / regime.q).ln()).ceil();
    let w_used = (raw_w as usize).clamp(1, params.n - 1);

    let beta_greedy = if params.algos.greedy {
        match greedy_resolving(&g) {
            Ok(res) => res.beta_estimate as i64,
            Err(e) => return TrialOutput::Skipped(format!("{label}: greedy: {e}")),
        }
    } else {
        -1
    };
    let beta_random = if params.algos.random {
        match random_resolving(&g, w_used, params.max_attempts, sampler_seed) {
            Ok(RandomOutcome::Found(res)) => res.beta_estimate as i64,
            Ok(RandomOutcome::NotFound { .. }) => -1,
            Err(e) => return TrialOutput::Skipped(format!("{label}: random: {e}")),
        }
    } else {
        -1
    };

    let diameter_empirical = match g.diameter() {
        Ok(d) => d,
        Err(e) => return TrialOutput::Skipped(format!("{label}: diameter: {e}")),
    };
    let diameter_predicted = match predict_diameter(params.n, gp.p, 0.0) {
        Ok(DiameterPrediction::Definite(d)) => i64::from(d),
        Ok(DiameterPrediction::Ambiguous { .. }) => -1,
        Err(_) => -1,
    };

    let runtime_ms = if params.timings {
        start.elapsed().as_millis() as u64
    } else {
        0
    };

    TrialOutput::Row(Box::new(SweepRecord {
        n: params.n,
        x: gp.x,
        p: gp.p,
        d: regime.d,
        i: regime.i,
        c: regime.c,
        q: regime.q,
        trial,
        seed: trial_master,
        beta_greedy,
        beta_random,
        w_used,
        diameter_empirical,
        diameter_predicted,
        runtime_ms,
    }))
}
