use std::path::PathBuf;

use thiserror::Error;

use crate::feasibility::SrgParams;

/// Errors produced across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("size limit exceeded: {what} would need {size} (limit {limit})")]
    SizeLimit {
        what: String,
        size: u128,
        limit: u128,
    },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("graph is disconnected; distances are undefined between components")]
    Disconnected,

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("malformed graph6 data: {0}")]
    Graph6(String),

    #[error("malformed edge list at line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("structure failed verification: {0}")]
    Verification(String),

    #[error("not supported: {0}")]
    Unsupported(String),

    #[error("construction does not give a strongly regular graph: {0}")]
    NotStronglyRegular(String),

    #[error("oracle rejected graph built by `{entry}` for {claimed}: measured {measured}")]
    OracleMismatch {
        entry: String,
        claimed: SrgParams,
        measured: String,
    },

    #[error("duplicate construction id `{0}`")]
    DuplicateEntry(String),

    #[error("parse error in {source_name} line {line}: {reason}")]
    Parse {
        source_name: String,
        line: usize,
        reason: String,
    },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameters(msg.into())
    }

    pub(crate) fn verification(msg: impl Into<String>) -> Self {
        Error::Verification(msg.into())
    }

    pub(crate) fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }
}
