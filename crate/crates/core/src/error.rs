use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Broad classes of failure, used to pick CLI exit codes and FFI status codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed input text or a violated precondition / invariant.
    Invalid,
    /// Well-formed input that the operation cannot handle (e.g. a disconnected
    /// graph where connectivity is required).
    Infeasible,
}

/// Vertex indices are stored zero-based and displayed one-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("empty input")]
    EmptyInput,

    #[error("matrix must be nonempty")]
    EmptyMatrix,

    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vertex {} out of range for a graph on {n} vertices", .vertex + 1)]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("the two vertices of a pair must differ (got {} twice)", .0 + 1)]
    SameVertex(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not simple")]
    NotSimple,

    #[error("enumeration on {n} vertices with multiplicity up to {max_mult} exceeds the limit of {limit} vertices")]
    EnumerationLimit { n: usize, max_mult: u32, limit: usize },

    #[error("no edge between {} and {}", .0 + 1, .1 + 1)]
    NoEdge(usize, usize),

    #[error("edge copy {copy} between {} and {} does not exist", .a + 1, .b + 1)]
    NoEdgeCopy { a: usize, b: usize, copy: u32 },

    #[error("vertices {} and {} have different weights {wa} and {wb}", .a + 1, .b + 1)]
    UnequalWeights { a: usize, b: usize, wa: String, wb: String },

    #[error("vertices {} and {} are adjacent", .0 + 1, .1 + 1)]
    Adjacent(usize, usize),

    #[error("vertex {} belongs to the marked pair", .0 + 1)]
    MarkedVertex(usize),

    #[error("weights of {} and {} differ by {gap}; thickening needs a gap of at least 2", .a + 1, .b + 1)]
    NothingToThicken { a: usize, b: usize, gap: String },

    #[error("invalid marking: {0}")]
    InvalidMarking(String),

    #[error("invalid path system: {0}")]
    InvalidPathSystem(String),

    #[error("search budget of {0} candidates exceeded")]
    SearchBudgetExceeded(usize),

    #[error("reduction step {step} failed: {message}")]
    ReductionStep { step: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Disconnected | Error::SearchBudgetExceeded(_) => ErrorKind::Infeasible,
            _ => ErrorKind::Invalid,
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}
