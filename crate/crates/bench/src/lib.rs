//! Shared fixtures for the benchmark targets.

use metridim_core::{gnp, GnpParams, Graph};

/// Seeded connected G(n, p) sample; panics if the draw is disconnected
/// (pick densities where that cannot realistically happen).
pub fn connected_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let g = gnp(GnpParams { n, p, seed });
    assert!(g.is_connected(), "benchmark fixture disconnected");
    g
}
