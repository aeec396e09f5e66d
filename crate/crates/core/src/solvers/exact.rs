//! Exact solvers: subset enumeration (the oracle) and branch-and-bound
//! over the pair-cover instance.

use std::time::{Duration, Instant};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::resolver::{resolution_from_matrix, PairCoverInstance, PAIR_COVER_CAP_DEFAULT};
use crate::solvers::{checked_result, SolveResult};

/// Default cap for the exhaustive oracle; enumeration is exponential in n.
pub const ORACLE_CAP_DEFAULT: usize = 12;

/// Enumerates vertex subsets in size order (lexicographic within each size)
/// and returns the first resolving set. Certified by construction.
///
/// ```
/// use metridim_core::{cycle, exhaustive_beta};
///
/// let res = exhaustive_beta(&cycle(6).unwrap()).unwrap();
/// assert_eq!(res.beta_estimate, 2);
/// assert!(res.certified);
/// ```
pub fn exhaustive_beta(g: &Graph) -> Result<SolveResult> {
    exhaustive_beta_with_cap(g, ORACLE_CAP_DEFAULT)
}

pub fn exhaustive_beta_with_cap(g: &Graph, cap: usize) -> Result<SolveResult> {
    let n = g.n();
    if n > cap {
        return Err(Error::TooLargeForOracle { n, cap });
    }
    g.ensure_connected()?;
    let start = Instant::now();
    let dm = g.all_pairs_distances();
    let mut tested = 0u64;
    for k in 1..n {
        let mut subset: Vec<Vertex> = (0..k as Vertex).collect();
        loop {
            tested += 1;
            if resolution_from_matrix(&dm, &subset).resolving {
                return Ok(checked_result(g, subset, true, tested, start.elapsed()));
            }
            if !next_combination(&mut subset, n) {
                break;
            }
        }
    }
    // Any co-singleton resolves a connected graph, so size n-1 always hits.
    unreachable!("no resolving set found up to size n-1");
}

/// Advances `subset` to the next k-combination of 0..n in lexicographic
/// order; false when exhausted.
fn next_combination(subset: &mut [Vertex], n: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < (n - k + i) as Vertex {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Optional search limits for [`exact_beta`]. Exceeding either cap stops the
/// search and returns the best solution found so far, flagged uncertified.
#[derive(Clone, Copy, Debug, Default)]
pub struct Budget {
    pub node_cap: Option<u64>,
    pub time_cap: Option<Duration>,
}

/// Minimum set cover over the pair-distinguishing masks by branch-and-bound.
///
/// The search starts from the greedy cover as an upper bound, branches on
/// the uncovered pair with the fewest remaining covering vertices, and
/// prunes with the bound |uncovered| / max mask gain. Children of a branch
/// exclude the covering vertices tried before them, so the solution space
/// is partitioned and completion certifies optimality.
pub fn exact_beta(g: &Graph, budget: &Budget) -> Result<SolveResult> {
    exact_beta_with_cap(g, budget, PAIR_COVER_CAP_DEFAULT)
}

pub fn exact_beta_with_cap(g: &Graph, budget: &Budget, cap: usize) -> Result<SolveResult> {
    let start = Instant::now();
    let instance = build_pair_cover_with_cap_helper(g, cap)?;
    let greedy = super::greedy_resolving_on(g, &instance)?;

    let mut search = Search {
        instance: &instance,
        cover_counts: count_covers(&instance),
        chosen: Vec::new(),
        forbidden: vec![false; g.n()],
        best: greedy.witness.clone(),
        nodes: 0,
        budget,
        start,
        truncated: false,
    };
    let root_covered = BitSet::new(instance.universe_size());
    search.recurse(&root_covered);

    let certified = !search.truncated;
    let nodes = search.nodes;
    let witness = search.best;
    Ok(checked_result(
        g,
        witness,
        certified,
        nodes,
        start.elapsed(),
    ))
}

fn build_pair_cover_with_cap_helper(g: &Graph, cap: usize) -> Result<PairCoverInstance> {
    crate::resolver::build_pair_cover_with_cap(g, cap)
}

/// Static cover multiplicity per pair. A chosen vertex's pairs are all
/// covered, so for *uncovered* pairs these counts minus forbidden coverers
/// are exactly the live branching choices.
fn count_covers(instance: &PairCoverInstance) -> Vec<u32> {
    let mut counts = vec![0u32; instance.universe_size()];
    for v in 0..instance.n() as Vertex {
        for idx in instance.mask(v).ones() {
            counts[idx] += 1;
        }
    }
    counts
}

struct Search<'a> {
    instance: &'a PairCoverInstance,
    /// Live covering-vertex count per pair (excludes forbidden vertices).
    cover_counts: Vec<u32>,
    chosen: Vec<Vertex>,
    forbidden: Vec<bool>,
    best: Vec<Vertex>,
    nodes: u64,
    budget: &'a Budget,
    start: Instant,
    truncated: bool,
}

impl Search<'_> {
    fn out_of_budget(&mut self) -> bool {
        if self.truncated {
            return true;
        }
        if let Some(cap) = self.budget.node_cap {
            if self.nodes >= cap {
                self.truncated = true;
            }
        }
        if let Some(cap) = self.budget.time_cap {
            // Instant checks are cheap but not free; amortize.
            if self.nodes.is_multiple_of(256) && self.start.elapsed() >= cap {
                self.truncated = true;
            }
        }
        self.truncated
    }

    fn recurse(&mut self, covered: &BitSet) {
        self.nodes += 1;
        if self.out_of_budget() {
            return;
        }
        let uncovered = self.instance.universe_size() - covered.count_ones();
        if uncovered == 0 {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return;
        }
        // Bound: every pick covers at most max_gain new pairs.
        let mut max_gain = 0usize;
        for v in 0..self.instance.n() as Vertex {
            if !self.forbidden[v as usize] {
                max_gain = max_gain.max(self.instance.mask(v).count_and_not(covered));
            }
        }
        if max_gain == 0 {
            return; // forbidden set killed feasibility on this branch
        }
        let lower = uncovered.div_ceil(max_gain);
        if self.chosen.len() + lower >= self.best.len() {
            return;
        }
        // Branch on the uncovered pair with the fewest live coverers.
        let branch_pair = covered
            .zeros()
            .min_by_key(|&idx| self.cover_counts[idx])
            .expect("uncovered > 0");
        if self.cover_counts[branch_pair] == 0 {
            return;
        }
        let coverers: Vec<Vertex> = (0..self.instance.n() as Vertex)
            .filter(|&v| !self.forbidden[v as usize] && self.instance.mask(v).contains(branch_pair))
            .collect();

        let mut newly_forbidden: Vec<Vertex> = Vec::with_capacity(coverers.len());
        for (child, &v) in coverers.iter().enumerate() {
            if child > 0 {
                // Solutions containing the previous coverer were fully
                // explored in its subtree; exclude it here on.
                let prev = coverers[child - 1];
                self.forbid(prev);
                newly_forbidden.push(prev);
            }
            let mut child_covered = covered.clone();
            child_covered.union_with(self.instance.mask(v));
            self.chosen.push(v);
            self.recurse(&child_covered);
            self.chosen.pop();
            if self.truncated {
                break;
            }
        }
        for v in newly_forbidden {
            self.unforbid(v);
        }
    }

    fn forbid(&mut self, v: Vertex) {
        self.forbidden[v as usize] = true;
        for idx in self.instance.mask(v).ones() {
            self.cover_counts[idx] -= 1;
        }
    }

    fn unforbid(&mut self, v: Vertex) {
        self.forbidden[v as usize] = false;
        for idx in self.instance.mask(v).ones() {
            self.cover_counts[idx] += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};

    #[test]
    fn oracle_on_named_families() {
        let res = exhaustive_beta(&path(6).unwrap()).unwrap();
        assert_eq!(res.beta_estimate, 1);
        assert_eq!(res.witness, vec![0]); // size order, lexicographic: endpoint 0 first
        assert!(res.certified);

        let res = exhaustive_beta(&complete(6).unwrap()).unwrap();
        assert_eq!(res.beta_estimate, 5);

        let res = exhaustive_beta(&cycle(6).unwrap()).unwrap();
        assert_eq!(res.beta_estimate, 2);
    }

    #[test]
    fn oracle_cap_enforced() {
        let g = path(13).unwrap();
        assert!(matches!(
            exhaustive_beta(&g),
            Err(Error::TooLargeForOracle { n: 13, cap: 12 })
        ));
        assert_eq!(exhaustive_beta_with_cap(&g, 13).unwrap().beta_estimate, 1);
    }

    #[test]
    fn combinations_enumerate_in_order() {
        let mut c = vec![0u32, 1];
        let mut seen = vec![c.clone()];
        while next_combination(&mut c, 4) {
            seen.push(c.clone());
        }
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    fn petersen() -> Graph {
        // Outer C5, inner pentagram, spokes.
        Graph::build(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
            ],
        )
        .unwrap()
    }

    #[test]
    fn exact_on_petersen_and_k8() {
        let res = exact_beta(&petersen(), &Budget::default()).unwrap();
        assert_eq!(res.beta_estimate, 3);
        assert!(res.certified);
        // Cross-check against the oracle route.
        let oracle = exhaustive_beta(&petersen()).unwrap();
        assert_eq!(oracle.beta_estimate, 3);

        let res = exact_beta(&complete(8).unwrap(), &Budget::default()).unwrap();
        assert_eq!(res.beta_estimate, 7);
        assert!(res.certified);
    }

    #[test]
    fn exact_budget_exhaustion_returns_uncertified() {
        let g = petersen();
        let res = exact_beta(
            &g,
            &Budget {
                node_cap: Some(1),
                time_cap: None,
            },
        )
        .unwrap();
        assert!(!res.certified);
        // Best-so-far comes from the greedy warm start and must still resolve.
        assert!(res.beta_estimate >= 3);
    }

    #[test]
    fn exact_rejects_disconnected() {
        let disc = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            exact_beta(&disc, &Budget::default()),
            Err(Error::Disconnected)
        ));
    }
}
