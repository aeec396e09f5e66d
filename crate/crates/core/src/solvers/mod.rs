//! Metric-dimension solvers: an exhaustive oracle, a branch-and-bound exact
//! solver over the pair-cover instance, the greedy set-cover approximation,
//! random-subset sampling, and the top-degree landmark heuristic.
//!
//! Every returned witness is re-verified through the direct
//! [`is_resolving`](crate::resolver::is_resolving) route before it leaves a
//! solver, independently of the pair-cover path that found it. All outputs
//! are deterministic functions of the graph, the parameters, and the seed.

mod exact;
mod heuristic;
mod sampling;

pub use exact::{
    exact_beta, exact_beta_with_cap, exhaustive_beta, exhaustive_beta_with_cap, Budget,
    ORACLE_CAP_DEFAULT,
};
pub(crate) use heuristic::greedy_resolving_on;
pub use heuristic::{greedy_resolving, topdeg_default_k, topdeg_resolving, TopDegOutcome};
pub use sampling::{estimate_resolve_probability, random_resolving, RandomOutcome};

use std::time::Duration;

use crate::graph::{Graph, Vertex};
use crate::resolver::is_resolving;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub beta_estimate: usize,
    /// A resolving set of size `beta_estimate`, ascending vertex ids.
    pub witness: Vec<Vertex>,
    /// True iff the solver proved no smaller resolving set exists.
    pub certified: bool,
    /// Search effort: subsets tested, branch-and-bound nodes, greedy picks,
    /// or sampling attempts, depending on the algorithm.
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

/// Internal invariant check run on every solver exit path: the witness must
/// itself pass the direct verification route.
pub(crate) fn checked_result(
    g: &Graph,
    mut witness: Vec<Vertex>,
    certified: bool,
    nodes_explored: u64,
    elapsed: Duration,
) -> SolveResult {
    witness.sort_unstable();
    witness.dedup();
    let check = is_resolving(g, &witness).expect("witness verification");
    assert!(
        check.resolving,
        "solver returned a non-resolving witness {witness:?}"
    );
    assert!(!witness.is_empty() && witness.len() < g.n());
    SolveResult {
        beta_estimate: witness.len(),
        witness,
        certified,
        nodes_explored,
        elapsed,
    }
}
