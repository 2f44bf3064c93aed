use thiserror::Error;

/// Errors produced by the core library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("graph too large: n = {n} exceeds the limit of {limit} for {what}")]
    SizeLimit {
        n: usize,
        limit: usize,
        what: &'static str,
    },

    #[error("malformed graph6 input at byte {offset}: {reason}")]
    MalformedGraph6 { offset: usize, reason: String },

    #[error("edge {u}-{v} is not present")]
    MissingEdge { u: usize, v: usize },

    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),

    #[error("rotation precondition violated for w in {offending:?}: {reason}")]
    RotationPrecondition {
        offending: Vec<usize>,
        reason: String,
    },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("zero vector")]
    ZeroVector,

    #[error("graph has no edges")]
    EmptyGraph,

    #[error("input graph is bipartite")]
    BipartiteInput,

    #[error("undecided comparison: {0}")]
    Undecided(String),

    #[error("cycle search budget exhausted for length {length} (graph {graph6})")]
    BudgetExhausted { length: usize, graph6: String },

    #[error("constraint violation: {0}")]
    ConstraintViolation(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("unknown check id `{0}`")]
    UnknownCheck(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
