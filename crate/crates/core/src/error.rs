//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("need at least {min} vertices, got n = {n}")]
    NTooSmall { n: usize, min: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: u32, n: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("landmark set is empty")]
    EmptyLandmarkSet,

    #[error("subject vertex {0} is itself a landmark")]
    SubjectInLandmarks(u32),

    #[error("exhaustive oracle is capped at n <= {cap}, got n = {n}")]
    TooLargeForOracle { n: usize, cap: usize },

    #[error("pair-cover instance is capped at n <= {cap}, got n = {n}; raise the cap to override")]
    InstanceTooLarge { n: usize, cap: usize },

    #[error("subset size {w} outside 1..={max}")]
    WOutOfRange { w: usize, max: usize },

    #[error("edge probability {0} outside [0, 1]")]
    InvalidProbability(f64),

    #[error("edge probability {0} is degenerate; need 0 < p < 1")]
    DegenerateP(f64),

    #[error("expected degree d = {0} too small; regime parameters need d > 1")]
    DegreeTooSmall(f64),

    #[error("{what} = {value} outside {domain}")]
    OutOfDomain {
        what: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("regime is dense (d > n/ln n); sphere expansion reports need a sparse regime")]
    RegimeNotSparse,

    #[error("landmark set size {r} exceeds (ln n)^2 / ln ln n = {max:.2}")]
    LandmarkSetTooLarge { r: usize, max: f64 },

    #[error("edge list parse error at line {line}: {msg}")]
    EdgeListParse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
