use thiserror::Error;

/// Errors produced by graph construction, matrix assembly and the verification harness.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("metric undefined: graph is disconnected")]
    Disconnected,
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("invalid parameters for family `{family}`: {reason}")]
    FamilyParams { family: String, reason: String },
    #[error("host graph needs at least 2 vertices, got {0}")]
    HostTooSmall(usize),
    #[error("expected {expected} factor graphs, got {got}")]
    FactorCount { expected: usize, got: usize },
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("integer overflow: {0}")]
    Overflow(String),
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("edge list, line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("spectrum mismatch: {0}")]
    SpectrumMismatch(String),
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("parameter `{name}`: {reason}")]
    Param { name: String, reason: String },
    #[error("thread pool: {0}")]
    ThreadPool(String),
}

pub type Result<T> = std::result::Result<T, Error>;
