use thiserror::Error;

/// Errors reported by the library.
///
/// The CLI maps `Validation` and `Domain` to exit code 2 and `Resource`
/// to exit code 3. `Internal` signals a broken mathematical invariant
/// (a bug), never bad input.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input (empty partition, nonpositive part, bad syntax).
    #[error("validation error: {0}")]
    Validation(String),

    /// Input outside an operation's mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Exact division requested where the divisor does not divide.
    #[error("not divisible: {0}")]
    Divisibility(String),

    /// Full enumeration refused because |S_lambda| exceeds the ceiling.
    #[error("enumeration ceiling exceeded: {0}")]
    Resource(String),

    /// A quantity the theory guarantees failed to hold; treat as a bug.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
