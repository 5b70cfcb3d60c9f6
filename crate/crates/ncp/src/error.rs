use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph is empty")]
    EmptyGraph,

    #[error("node id {0} out of range")]
    NodeOutOfRange(usize),

    #[error("unknown original node id {0}")]
    UnknownOriginalId(i64),

    #[error("duplicate member id {0} in cluster")]
    DuplicateMember(usize),

    #[error("cluster is degenerate for {kind}: |S| = {size} on {n} nodes")]
    DegenerateCluster {
        kind: &'static str,
        size: usize,
        n: usize,
    },

    #[error("member node {0} is isolated (degree 0)")]
    IsolatedMember(usize),

    #[error("expected number of internal edges is zero; modularity ratio undefined")]
    ZeroExpectedEdges,

    #[error("induced subgraph is disconnected")]
    DisconnectedSubgraph,

    #[error("cluster too small: need at least {need} nodes, got {got}")]
    ClusterTooSmall { need: usize, got: usize },

    #[error("graph is disconnected")]
    DisconnectedGraph,

    #[error("empty cluster")]
    EmptyCluster,

    #[error("empty diffusion support")]
    EmptySupport,

    #[error("invalid flow terminal: {0}")]
    InvalidTerminal(usize),

    #[error("graph too large for exhaustive enumeration: n = {n} > {max_n}")]
    TooLargeForExact { n: usize, max_n: usize },

    #[error("capacity scaling would overflow 64-bit integers")]
    CapacityOverflow,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("numerical routine failed to converge: {0}")]
    NonConverged(String),

    #[error("unknown score kind: {0}")]
    UnknownScoreKind(String),

    #[error("unknown method: {0}")]
    UnknownMethod(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
