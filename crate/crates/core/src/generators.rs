//! Seeded graph generation.
//!
//! `gnp` realizes the binomial random graph by one independent coin flip
//! per unordered vertex pair. The flips are driven by a Pcg64 stream
//! (`rand_pcg::Pcg64`, value-stable across platforms) seeded with a 64-bit
//! seed, and pairs are enumerated in fixed lexicographic order (u < v), so a
//! seed fully determines the edge set. Exactly one draw is consumed per
//! pair regardless of outcome, keeping the stream aligned for any p.
//!
//! Changing the generator or the enumeration order is a breaking change to
//! every persisted artifact (edge lists, sweep CSVs) derived from seeds.

use rand::{RngExt, SeedableRng};
use rand_pcg::Pcg64;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, MIN_VERTICES};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GnpParams {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
}

impl GnpParams {
    pub fn new(n: usize, p: f64, seed: u64) -> Result<Self> {
        if n < MIN_VERTICES {
            return Err(Error::NTooSmall {
                n,
                min: MIN_VERTICES,
            });
        }
        if !(0.0..=1.0).contains(&p) || p.is_nan() {
            return Err(Error::InvalidProbability(p));
        }
        Ok(GnpParams { n, p, seed })
    }
}

/// Samples G(n, p): each unordered pair becomes an edge independently with
/// probability p. Identical parameters give identical edge sets.
///
/// ```
/// use metridim_core::{gnp, GnpParams};
///
/// let params = GnpParams::new(50, 0.3, 42).unwrap();
/// assert_eq!(gnp(params).edges(), gnp(params).edges());
/// ```
pub fn gnp(params: GnpParams) -> Graph {
    let GnpParams { n, p, seed } = params;
    let mut rng = Pcg64::seed_from_u64(seed);
    let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut m = 0usize;
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random::<f64>() < p {
                adj[u].push(v as Vertex);
                adj[v].push(u as Vertex);
                m += 1;
            }
        }
    }
    // Pair enumeration already emits each neighbor list sorted.
    Graph::from_sorted_adjacency(n, adj, m)
}

/// Convenience wrapper validating parameters before sampling.
pub fn gnp_checked(n: usize, p: f64, seed: u64) -> Result<Graph> {
    Ok(gnp(GnpParams::new(n, p, seed)?))
}

/// Path 0-1-...-(n-1).
pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..n.saturating_sub(1))
        .map(|i| (i as Vertex, (i + 1) as Vertex))
        .collect();
    Graph::build(n, &edges)
}

/// Cycle 0-1-...-(n-1)-0. Needs n >= 3.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::NTooSmall { n, min: 3 });
    }
    let mut edges: Vec<_> = (0..n - 1)
        .map(|i| (i as Vertex, (i + 1) as Vertex))
        .collect();
    edges.push((0, (n - 1) as Vertex));
    Graph::build(n, &edges)
}

/// Complete graph K_n.
pub fn complete(n: usize) -> Result<Graph> {
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u as Vertex, v as Vertex));
        }
    }
    Graph::build(n, &edges)
}

const SPLITMIX64_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// Derives the seed for trial `trial_index` from a master seed.
///
/// This is the SplitMix64 output function: the result equals the
/// `(trial_index + 1)`-th output of a SplitMix64 generator seeded with
/// `master`, so distinct indices give independent-looking streams and the
/// mapping is documented by a published reference implementation.
/// `derive_trial_seed(0, 0) == 0xE220A8397B1DCDAF`.
pub fn derive_trial_seed(master: u64, trial_index: u64) -> u64 {
    let z = master.wrapping_add(SPLITMIX64_GAMMA.wrapping_mul(trial_index.wrapping_add(1)));
    let z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    let z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
