use thiserror::Error;

/// Errors across the exact pipeline. Resource exhaustion is kept distinct
/// from mathematical failure so callers can budget-retry without masking
/// genuine errors.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("polynomials belong to different rings ({left} vs {right})")]
    RingMismatch { left: String, right: String },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("variable index {index} out of bounds for ring with {nvars} variables")]
    VarIndex { index: usize, nvars: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquareMatrix { rows: usize, cols: usize },

    #[error("resource budget exceeded: {what} (limit {limit})")]
    ResourceLimit { what: String, limit: usize },

    #[error("ideal is not zero-dimensional{}", dim.map(|d| format!(" (dimension {d})")).unwrap_or_default())]
    NotZeroDimensional { dim: Option<i64> },

    #[error("positive-dimensional input unsupported here (computed dimension {dim})")]
    PositiveDimensional { dim: i64 },

    #[error("unsupported input shape: {0}")]
    UnsupportedShape(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for budget exhaustion as opposed to a mathematical failure.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit { .. })
    }
}
