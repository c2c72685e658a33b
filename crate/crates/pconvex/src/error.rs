//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("syntax error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("variable x{index} exceeds dimension {dim} (at byte {pos})")]
    VariableOutOfRange { index: usize, dim: usize, pos: usize },

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("not a characteristic: {0}")]
    NotACharacteristic(String),

    #[error("invalid cone: {0}")]
    InvalidCone(String),

    #[error("invalid probe configuration: {0}")]
    InvalidConfig(String),

    #[error("ball radius must be positive, got {0}")]
    NonPositiveRadius(f64),

    #[error("ratio parameter t must exceed 1, got {0}")]
    TNotAboveOne(f64),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("pipeline assertion failed: {0}")]
    PipelineAssertion(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
