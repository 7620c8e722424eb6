use thiserror::Error;

/// Errors produced by parsing and by operations whose preconditions fail.
///
/// Validation failure is *not* an error: [`crate::graph::validate_clttf`]
/// returns a report. Only operations that require an already-accepted graph
/// return `InvalidGraph`.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph rejected by validation: {0}")]
    InvalidGraph(String),
    #[error("edge {{{0}, {1}}} is not a separating edge")]
    NotSeparating(String, String),
    #[error("{0} is not an edge of this chunk tree")]
    NotTreeEdge(String),
    #[error("vertex sets of the two graphs differ")]
    VertexSetMismatch,
    #[error("operands belong to different ambient twist systems")]
    AmbientMismatch,
    #[error("twist selection has wrong length: expected {expected}, got {got}")]
    EtaLength { expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
