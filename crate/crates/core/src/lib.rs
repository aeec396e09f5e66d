//! Metric dimension of graphs, with the random-graph lens.
//!
//! The metric dimension beta(G) of a connected graph is the smallest set of
//! landmark vertices whose hop-distance vectors tell all vertices apart.
//! This crate provides:
//!
//! * [`graph`] — immutable simple undirected graphs with BFS distance
//!   machinery and an edge-list text format ([`io`]);
//! * [`generators`] — seeded G(n, p) sampling, structured families, and
//!   reproducible per-trial seed derivation;
//! * [`resolver`] — landmark distance vectors, resolving-set verification,
//!   and the pair-distinguishing set-cover reformulation;
//! * [`solvers`] — exhaustive oracle, branch-and-bound exact solver, greedy
//!   set-cover approximation, random subset sampling, and top-degree
//!   heuristic, plus resolve-probability estimation;
//! * [`theory`] — closed-form regime parameters (d, i, c, q, eta) and
//!   predicted beta bounds, the zigzag curves, the diameter threshold
//!   criterion, and Chernoff-style tolerance calculus;
//! * [`expansion`] — empirical sphere-size concentration measurements.
//!
//! All randomized operations are driven by named, value-stable generators
//! (Pcg64 streams, SplitMix64 seed derivation) and are deterministic
//! functions of their seeds.

pub mod bitset;
pub mod error;
pub mod expansion;
pub mod generators;
pub mod graph;
pub mod io;
pub mod resolver;
pub mod solvers;
pub mod theory;

pub use error::{Error, Result};
pub use expansion::{
    expansion_report, sphere_excluding_landmarks, sphere_sizes, ExpansionParams, ExpansionRecord,
    ExpansionReport,
};
pub use generators::{complete, cycle, derive_trial_seed, gnp, gnp_checked, path, GnpParams};
pub use graph::{DistanceMatrix, DistanceRow, Graph, Vertex, UNREACHABLE};
pub use resolver::{
    build_pair_cover, build_pair_cover_with_cap, distance_vector, distinguishes, is_resolving,
    LandmarkVector, PairCoverInstance, Resolution, PAIR_COVER_CAP_DEFAULT,
};
pub use solvers::{
    estimate_resolve_probability, exact_beta, exact_beta_with_cap, exhaustive_beta,
    exhaustive_beta_with_cap, greedy_resolving, random_resolving, topdeg_default_k,
    topdeg_resolving, Budget, RandomOutcome, SolveResult, TopDegOutcome, ORACLE_CAP_DEFAULT,
};
pub use theory::{
    chernoff_tolerance, compute_regime, predict_beta, predict_diameter, ratio_bound,
    subthreshold_size, zigzag_f, CaseLabel, ChernoffTolerance, DiameterPrediction, PredictConfig,
    Prediction, Regime,
};
