use thiserror::Error;

/// Errors raised by the math layers.
///
/// The split between variants mirrors how a caller is expected to react:
/// argument and domain errors mean the request itself was malformed,
/// inconsistency and incomplete-data errors mean the supplied mathematical
/// data cannot describe a real configuration, and `Internal` is a bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument error: {0}")]
    Argument(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid complex: d^{} composed with d^{} is nonzero", .degree + 1, .degree)]
    InvalidComplex { degree: i64 },

    #[error("inconsistent input: {0}")]
    Inconsistent(String),

    #[error("incomplete data for stratum {stratum}: {detail}")]
    IncompleteData { stratum: String, detail: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
