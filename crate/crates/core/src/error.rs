use thiserror::Error;

/// Errors raised by the library. Verification failures are not errors; they
/// are reported through [`crate::verify::VerificationReport`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("ground size {n} exceeds the cap of {cap}")]
    Capacity { n: usize, cap: usize },

    #[error("rank {k} is out of range for ground size {n}")]
    Range { k: usize, n: usize },

    #[error("mask {mask:#b} has bits outside [1, {n}]")]
    InvalidSubset { mask: u64, n: usize },

    #[error("ground sizes differ: {left} vs {right}")]
    Context { left: usize, right: usize },

    #[error("vector mixes ranks {first} and {second}")]
    NotHomogeneous { first: usize, second: usize },

    #[error("chain does not fit this extension case: {0}")]
    Case(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("invalid chain: {0}")]
    InvalidChain(String),

    #[error("malformed document: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
