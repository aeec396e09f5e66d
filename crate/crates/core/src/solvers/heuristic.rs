//! Polynomial-time landmark heuristics: greedy set cover and top-degree
//! selection.

use std::time::Instant;

use crate::bitset::BitSet;
use crate::error::Result;
use crate::graph::{Graph, Vertex};
use crate::resolver::{build_pair_cover, is_resolving, PairCoverInstance};
use crate::solvers::{checked_result, SolveResult};

/// Greedy set cover over the pair-distinguishing masks: repeatedly add the
/// vertex covering the most still-uncovered pairs, ties broken by smallest
/// vertex id. Carries the classic ln(C(n,2)) + 1 approximation guarantee.
pub fn greedy_resolving(g: &Graph) -> Result<SolveResult> {
    let instance = build_pair_cover(g)?;
    greedy_resolving_on(g, &instance)
}

pub(crate) fn greedy_resolving_on(g: &Graph, instance: &PairCoverInstance) -> Result<SolveResult> {
    let start = Instant::now();
    let mut covered = BitSet::new(instance.universe_size());
    let mut chosen: Vec<Vertex> = Vec::new();
    let mut rounds = 0u64;
    while !covered.is_full() {
        let mut best_v = 0 as Vertex;
        let mut best_gain = 0usize;
        for v in 0..instance.n() as Vertex {
            let gain = instance.mask(v).count_and_not(&covered);
            if gain > best_gain {
                best_gain = gain;
                best_v = v;
            }
        }
        // Every pair {x, y} is distinguished by x itself, so a connected
        // instance always makes progress.
        assert!(best_gain > 0, "uncoverable pair in connected instance");
        covered.union_with(instance.mask(best_v));
        chosen.push(best_v);
        rounds += 1;
    }
    Ok(checked_result(g, chosen, false, rounds, start.elapsed()))
}

/// Outcome of the top-degree heuristic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TopDegOutcome {
    Resolving(SolveResult),
    /// The selected set failed; `witness` is the first unresolved pair.
    NotResolving {
        selected: Vec<Vertex>,
        witness: (Vertex, Vertex),
    },
}

/// Takes the k highest-degree vertices (ties broken by smallest id) and
/// verifies them as a landmark set. With k = ceil(3 ln n / ln 2) this is the
/// classic high-degree landmark scheme for dense random graphs.
pub fn topdeg_resolving(g: &Graph, k: usize) -> Result<TopDegOutcome> {
    g.ensure_connected()?;
    let n = g.n();
    if k == 0 || k > n - 1 {
        return Err(crate::error::Error::WOutOfRange { w: k, max: n - 1 });
    }
    let mut by_degree: Vec<Vertex> = (0..n as Vertex).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut selected: Vec<Vertex> = by_degree[..k].to_vec();
    selected.sort_unstable();

    let start = Instant::now();
    let res = is_resolving(g, &selected)?;
    if res.resolving {
        Ok(TopDegOutcome::Resolving(checked_result(
            g,
            selected,
            false,
            1,
            start.elapsed(),
        )))
    } else {
        Ok(TopDegOutcome::NotResolving {
            selected,
            witness: res.witness.expect("non-resolving has witness"),
        })
    }
}

/// Number of top-degree landmarks used for dense random graphs:
/// ceil((3 ln n) / ln 2).
pub fn topdeg_default_k(n: usize) -> usize {
    ((3.0 * (n as f64).ln()) / std::f64::consts::LN_2).ceil() as usize
}
