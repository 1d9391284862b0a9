use crate::graph::VertexId;

/// Errors produced by graph construction, parsing, and the algorithms.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("line {line}: malformed line: {reason}")]
    MalformedLine { line: usize, reason: String },
    #[error("line {line}: edge weight must be a positive integer")]
    NonPositiveWeight { line: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoopLine { line: usize, vertex: VertexId },
    #[error("line {line}: vertex id {vertex} out of range (graph has {n} vertices)")]
    VertexOutOfRangeLine { line: usize, vertex: usize, n: usize },

    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: VertexId },
    #[error("edge ({u}, {v}) has zero weight")]
    ZeroWeight { u: VertexId, v: VertexId },
    #[error("vertex id {vertex} out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("total edge weight exceeds 2^63")]
    WeightOverflow,

    #[error("vertex set must be non-empty")]
    EmptyVertexSet,
    #[error("vertex set must be a proper subset of the vertices")]
    FullVertexSet,

    #[error("operation needs at least {required} vertices, graph has {found}")]
    TooFewVertices { required: usize, found: usize },
    #[error("graph must be connected")]
    Disconnected,

    #[error("rank weight must be at least 1")]
    RankWeightZero,
    #[error("uniform draw {draw} outside [0, 1)")]
    DrawOutOfRange { draw: f64 },

    #[error("invalid local-cut query: {reason}")]
    InvalidQuery { reason: String },
    #[error("set of {size} vertices exceeds the brute-force cap {cap}")]
    SubsetTooLarge { size: usize, cap: usize },
    #[error("edge {edge} is not present")]
    EdgeAbsent { edge: usize },

    #[error("epsilon must be positive, got {epsilon}")]
    NonPositiveEpsilon { epsilon: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
