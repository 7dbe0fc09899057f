use thiserror::Error;

/// Errors produced by parsing, decomposition, oracles and generators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown node `{0}`")]
    UnknownNode(String),

    #[error("unknown edge ({tail},{head}) #{ordinal}")]
    UnknownEdge {
        tail: String,
        head: String,
        ordinal: usize,
    },

    #[error("node id {0} is out of range")]
    NodeOutOfRange(usize),

    #[error("no s-t path: `{to}` is unreachable from `{from}`")]
    Unreachable { from: String, to: String },

    #[error("source and target must differ (both are `{0}`)")]
    SourceIsTarget(String),

    #[error("oracle size guard exceeded: {0}")]
    OracleGuard(String),

    #[error("nodes must be pairwise distinct")]
    NotDistinct,

    #[error("invalid family parameter: {0}")]
    InvalidFamily(String),

    #[error("visibility set does not belong to this graph")]
    VisibilityMismatch,

    #[error("{0}")]
    Intractable(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
