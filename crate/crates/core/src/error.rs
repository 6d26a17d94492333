use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("uniformity rank must be at least {min}, got {r}")]
    RankTooSmall { r: usize, min: usize },

    #[error("this condition is stated for r = {expected}, got {actual}")]
    RankMismatch { expected: usize, actual: usize },

    #[error("degree {value} at position {index} is outside [0, {max}]")]
    ValueOutOfRange { index: usize, value: i64, max: String },

    #[error("degree sequence is empty")]
    EmptySequence,

    #[error("sequences have different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },

    #[error("minimum degree must be {expected}, got {actual}")]
    DeltaMismatch { expected: u64, actual: u64 },

    #[error("edge {edge:?} appears more than once")]
    DuplicateEdge { edge: Vec<usize> },

    #[error("edge {edge:?} does not have exactly {r} distinct vertices")]
    BadEdgeSize { edge: Vec<usize>, r: usize },

    #[error("vertex {vertex} is out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("connectivity is undefined for the empty hypergraph")]
    ConnectivityUndefined,

    #[error("edge connectivity needs at least 2 vertices, got {n}")]
    TooFewVertices { n: usize },

    #[error("instance too large: {0}")]
    InstanceTooLarge(String),

    #[error("search budget of {budget} node expansions exhausted")]
    BudgetExhausted { budget: u64 },

    #[error("sequence is not {r}-uniform hypergraphic")]
    NotHypergraphic { r: usize },

    #[error("no pairwise-distinct crossing edges realize the profile")]
    InfeasibleProfile,

    #[error("invalid extremal specification: {0}")]
    SpecInvalid(String),

    #[error("verdict does not witness a violation for this input: {0}")]
    VerdictMismatch(String),

    #[error("minimum degree must be at least {min}, got {actual}")]
    MinDegreeTooSmall { min: u64, actual: u64 },

    #[error("{0}")]
    Usage(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}
