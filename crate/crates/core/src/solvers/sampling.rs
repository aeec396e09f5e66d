//! Randomized resolving-set search and resolve-probability estimation.
//!
//! Both operations sample uniform w-subsets of the vertex set from seeded
//! Pcg64 streams: subsets are drawn without replacement within one attempt
//! and independently across attempts, with the attempt/trial stream seeds
//! derived via [`derive_trial_seed`], so results are pure functions of
//! (graph, w, counts, seed).

use std::time::Instant;

use rand::{Rng, RngExt, SeedableRng};
use rand_pcg::Pcg64;

use crate::error::{Error, Result};
use crate::generators::derive_trial_seed;
use crate::graph::{Graph, Vertex};
use crate::resolver::is_resolving;
use crate::solvers::{checked_result, SolveResult};

/// Outcome of the randomized search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RandomOutcome {
    Found(SolveResult),
    NotFound { attempts: u64 },
}

/// Uniform w-subset of 0..n without replacement (Floyd's algorithm),
/// returned in ascending order.
fn sample_subset<R: Rng>(rng: &mut R, n: usize, w: usize) -> Vec<Vertex> {
    debug_assert!(w <= n);
    let mut chosen: Vec<Vertex> = Vec::with_capacity(w);
    for j in (n - w)..n {
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

fn check_w(g: &Graph, w: usize) -> Result<()> {
    let max = g.n() - 1;
    if w == 0 || w > max {
        return Err(Error::WOutOfRange { w, max });
    }
    Ok(())
}

/// Samples uniform w-subsets until one resolves or `max_attempts` runs out.
pub fn random_resolving(
    g: &Graph,
    w: usize,
    max_attempts: u64,
    seed: u64,
) -> Result<RandomOutcome> {
    g.ensure_connected()?;
    check_w(g, w)?;
    let start = Instant::now();
    for attempt in 0..max_attempts {
        let mut rng = Pcg64::seed_from_u64(derive_trial_seed(seed, attempt));
        let subset = sample_subset(&mut rng, g.n(), w);
        if is_resolving(g, &subset)?.resolving {
            return Ok(RandomOutcome::Found(checked_result(
                g,
                subset,
                false,
                attempt + 1,
                start.elapsed(),
            )));
        }
    }
    Ok(RandomOutcome::NotFound {
        attempts: max_attempts,
    })
}

/// Fraction of `trials` uniform w-subsets that resolve the graph.
/// Trial t draws its subset from the stream seeded with
/// `derive_trial_seed(seed, t)`.
pub fn estimate_resolve_probability(g: &Graph, w: usize, trials: u64, seed: u64) -> Result<f64> {
    g.ensure_connected()?;
    check_w(g, w)?;
    if trials == 0 {
        return Err(Error::OutOfDomain {
            what: "trials",
            value: 0.0,
            domain: "[1, inf)",
        });
    }
    let mut successes = 0u64;
    for trial in 0..trials {
        let mut rng = Pcg64::seed_from_u64(derive_trial_seed(seed, trial));
        let subset = sample_subset(&mut rng, g.n(), w);
        if is_resolving(g, &subset)?.resolving {
            successes += 1;
        }
    }
    Ok(successes as f64 / trials as f64)
}
