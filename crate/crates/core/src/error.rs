use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Quantum numbers or parameters outside the domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Exact arithmetic overflowed its integer representation.
    #[error("numeric overflow: {0}")]
    Overflow(String),

    /// The diagonalization oracle could not identify the perturbed eigenvector.
    #[error(
        "ambiguous eigenvector match (best overlap {overlap:.4} < 0.99); try a smaller theta_z"
    )]
    AmbiguousOverlap { overlap: f64 },

    /// Malformed term-symbol text.
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
