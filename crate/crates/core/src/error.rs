use thiserror::Error;

/// Errors raised by the numerical routines and the harness.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("non-invertible: {0}")]
    NonInvertible(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("imaginary units are not orthogonal (dot = {0:e})")]
    NonOrthogonal(f64),

    #[error("reciprocal undefined at origin: |a_0| = {0:e}")]
    ReciprocalUndefined(f64),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("grid mismatch: expected {expected} samples, got {got}")]
    GridMismatch { expected: usize, got: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown check id `{0}`")]
    UnknownCheck(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
