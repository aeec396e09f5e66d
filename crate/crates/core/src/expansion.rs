//! Empirical sphere-expansion measurements on sparse random graphs.
//!
//! In the sparse regime the sphere S(v, i) of radius i around a vertex
//! concentrates near d^i, and this keeps holding for spheres with the
//! i-ball of a small landmark set removed. The report samples seeded
//! G(n, p) instances, measures sphere sizes for sampled vertices at each
//! radius, and records relative errors against the d^radius prediction.
//! Acceptance thresholds live in tests, not here: the report carries raw
//! sizes and per-trial maxima.
//!
//! `r_size = 0` measures plain spheres |S(x, i)|; `r_size > 0` instead
//! measures |S(x, i) \ N(R, i)| for one sampled landmark set R per trial
//! (subjects are drawn outside R). Both share the same record schema, with
//! d^radius as the predicted size either way.

use rand::{Rng, RngExt, SeedableRng};
use rand_pcg::Pcg64;

use crate::error::{Error, Result};
use crate::generators::{derive_trial_seed, gnp, GnpParams};
use crate::graph::{Graph, Vertex, UNREACHABLE};
use crate::theory::compute_regime;

/// BFS layer sizes |S(v, 0)|, ..., |S(v, max_radius)|.
pub fn sphere_sizes(g: &Graph, v: Vertex, max_radius: u32) -> Result<Vec<usize>> {
    g.ensure_connected()?;
    let row = g.bfs_distances(v)?;
    let mut counts = vec![0usize; max_radius as usize + 1];
    for &d in &row.dist {
        if d <= max_radius {
            counts[d as usize] += 1;
        }
    }
    Ok(counts)
}

/// |S(x, radius) \ N(R, radius)|: vertices at distance exactly `radius`
/// from x that are farther than `radius` from every landmark.
pub fn sphere_excluding_landmarks(
    g: &Graph,
    x: Vertex,
    landmarks: &[Vertex],
    radius: u32,
) -> Result<usize> {
    g.ensure_connected()?;
    if landmarks.is_empty() {
        return Err(Error::EmptyLandmarkSet);
    }
    if landmarks.contains(&x) {
        return Err(Error::SubjectInLandmarks(x));
    }
    let from_x = g.bfs_distances(x)?;
    let ball = multi_source_distances(g, landmarks)?;
    Ok((0..g.n())
        .filter(|&v| from_x.dist[v] == radius && ball[v] > radius)
        .count())
}

/// Hop distance to the nearest of several sources.
fn multi_source_distances(g: &Graph, sources: &[Vertex]) -> Result<Vec<u32>> {
    let mut dist = vec![UNREACHABLE; g.n()];
    let mut queue = std::collections::VecDeque::new();
    for &s in sources {
        if s as usize >= g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: s,
                n: g.n(),
            });
        }
        if dist[s as usize] == UNREACHABLE {
            dist[s as usize] = 0;
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        let du = dist[u as usize];
        for &w in g.neighbors(u) {
            if dist[w as usize] == UNREACHABLE {
                dist[w as usize] = du + 1;
                queue.push_back(w);
            }
        }
    }
    Ok(dist)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExpansionParams {
    pub n: usize,
    pub p: f64,
    pub max_radius: u32,
    pub trials: u32,
    pub master_seed: u64,
    /// 0 measures plain spheres; > 0 measures landmark-excluded spheres
    /// with one sampled R of this size per trial.
    pub r_size: usize,
    /// Subjects measured per trial; defaults to min(n, 200) when `None`.
    pub samples_per_trial: Option<usize>,
}

/// One measured (trial, vertex, radius) cell.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExpansionRecord {
    pub trial: u32,
    pub seed: u64,
    pub vertex: Vertex,
    pub radius: u32,
    pub sphere_size: usize,
    /// d^radius with d = p(n-1).
    pub predicted: f64,
    /// sphere_size / predicted - 1.
    pub rel_error: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrialStats {
    pub trial: u32,
    pub seed: u64,
    pub connected: bool,
    /// Per radius 0..=max_radius, the max |rel_error| over this trial's
    /// records; NaN-free (empty radii report 0).
    pub max_abs_rel_error: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExpansionReport {
    pub n: usize,
    pub p: f64,
    pub d: f64,
    pub r_size: usize,
    pub records: Vec<ExpansionRecord>,
    pub trials: Vec<TrialStats>,
    /// Max |rel_error| per radius across all connected trials.
    pub max_abs_rel_error_by_radius: Vec<f64>,
    pub warnings: Vec<String>,
}

/// Runs seeded expansion trials. Trial t generates G(n, p) with seed
/// `derive_trial_seed(master_seed, t)` and samples subjects (and landmarks,
/// when `r_size > 0`) from the stream seeded with the trial seed's own
/// derived child. Disconnected samples are skipped and noted.
pub fn expansion_report(params: &ExpansionParams) -> Result<ExpansionReport> {
    let ExpansionParams {
        n,
        p,
        max_radius,
        trials,
        master_seed,
        r_size,
        samples_per_trial,
    } = *params;

    let regime = compute_regime(n, p)?;
    if regime.dense {
        return Err(Error::RegimeNotSparse);
    }
    let nf = n as f64;
    let r_limit = nf.ln().powi(2) / nf.ln().ln();
    if (r_size as f64) > r_limit {
        return Err(Error::LandmarkSetTooLarge {
            r: r_size,
            max: r_limit,
        });
    }
    let d = regime.d;
    let samples = samples_per_trial.unwrap_or_else(|| n.min(200));

    let mut warnings = Vec::new();
    if r_size > 0 && r_size as f64 * d.powi(max_radius as i32) > nf / 10.0 {
        warnings.push(format!(
            "r * d^radius = {:.1} exceeds n/10; excluded-sphere estimates may be off-regime",
            r_size as f64 * d.powi(max_radius as i32)
        ));
    }

    let radii = max_radius as usize + 1;
    let predicted: Vec<f64> = (0..radii).map(|i| d.powi(i as i32)).collect();

    let mut records = Vec::new();
    let mut trial_stats = Vec::new();
    for trial in 0..trials {
        let seed = derive_trial_seed(master_seed, trial as u64);
        let g = gnp(GnpParams { n, p, seed });
        if !g.is_connected() {
            warnings.push(format!("trial {trial} (seed {seed}) disconnected; skipped"));
            trial_stats.push(TrialStats {
                trial,
                seed,
                connected: false,
                max_abs_rel_error: vec![0.0; radii],
            });
            continue;
        }
        let mut rng = Pcg64::seed_from_u64(derive_trial_seed(seed, 0));
        let landmarks = sample_distinct(&mut rng, n, r_size);
        let subjects = sample_subjects(&mut rng, n, samples, &landmarks);

        let ball = if r_size > 0 {
            Some(multi_source_distances(&g, &landmarks)?)
        } else {
            None
        };

        let mut max_err = vec![0.0f64; radii];
        for &x in &subjects {
            let from_x = g.bfs_distances(x)?;
            let mut counts = vec![0usize; radii];
            for v in 0..n {
                let dx = from_x.dist[v];
                if dx as usize >= radii {
                    continue;
                }
                match &ball {
                    Some(ball) => {
                        if ball[v] > dx {
                            counts[dx as usize] += 1;
                        }
                    }
                    None => counts[dx as usize] += 1,
                }
            }
            for (radius, &count) in counts.iter().enumerate() {
                let rel_error = count as f64 / predicted[radius] - 1.0;
                max_err[radius] = max_err[radius].max(rel_error.abs());
                records.push(ExpansionRecord {
                    trial,
                    seed,
                    vertex: x,
                    radius: radius as u32,
                    sphere_size: count,
                    predicted: predicted[radius],
                    rel_error,
                });
            }
        }
        trial_stats.push(TrialStats {
            trial,
            seed,
            connected: true,
            max_abs_rel_error: max_err,
        });
    }

    let mut overall = vec![0.0f64; radii];
    for ts in trial_stats.iter().filter(|ts| ts.connected) {
        for (r, &e) in ts.max_abs_rel_error.iter().enumerate() {
            overall[r] = overall[r].max(e);
        }
    }

    Ok(ExpansionReport {
        n,
        p,
        d,
        r_size,
        records,
        trials: trial_stats,
        max_abs_rel_error_by_radius: overall,
        warnings,
    })
}

/// `count` distinct vertices via Floyd's sampling, ascending.
fn sample_distinct<R: Rng>(rng: &mut R, n: usize, count: usize) -> Vec<Vertex> {
    let mut chosen: Vec<Vertex> = Vec::with_capacity(count);
    for j in (n - count)..n {
        let t = rng.random_range(0..=j as u64) as Vertex;
        if chosen.contains(&t) {
            chosen.push(j as Vertex);
        } else {
            chosen.push(t);
        }
    }
    chosen.sort_unstable();
    chosen
}

/// Samples subjects uniformly from the complement of `excluded`.
fn sample_subjects<R: Rng>(
    rng: &mut R,
    n: usize,
    count: usize,
    excluded: &[Vertex],
) -> Vec<Vertex> {
    let pool: Vec<Vertex> = (0..n as Vertex).filter(|v| !excluded.contains(v)).collect();
    let count = count.min(pool.len());
    let picks = sample_distinct(rng, pool.len(), count);
    picks.into_iter().map(|i| pool[i as usize]).collect()
}
