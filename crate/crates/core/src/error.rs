use thiserror::Error;

/// Errors produced by graph construction, parsing, and the verification harnesses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("labeling is not a permutation of 1..{n}: {reason}")]
    NotAPermutation { n: usize, reason: String },

    #[error("vertex count must be at least {min}, got {got}")]
    TooFewVertices { min: usize, got: usize },

    #[error("vertex count {0} exceeds the supported maximum of 64")]
    TooManyVertices(usize),

    #[error("vertex {vertex} is outside 1..{n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(usize, usize),

    #[error("graph is not connected")]
    Disconnected,

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("invalid ad-pattern: {0}")]
    InvalidPattern(String),

    #[error("coefficient of {alpha} has q-degree {degree}, above the edge count {edges}")]
    DegreeAboveEdgeCount {
        alpha: String,
        degree: usize,
        edges: usize,
    },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("tableau does not belong to {set}: {reason}")]
    NotInSet { set: &'static str, reason: String },

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("invalid JSON: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
