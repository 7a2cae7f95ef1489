//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors surfaced by the library.
///
/// `Internal` is reserved for violated consistency checks: two independent
/// computations of the same quantity disagreeing, a symmetric polynomial
/// failing to peel into Schur characters with non-negative multiplicities,
/// and the like. Callers should treat it as a bug, not bad input; the CLI
/// maps it to its own exit code.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("rank mismatch: {0}")]
    RankMismatch(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
