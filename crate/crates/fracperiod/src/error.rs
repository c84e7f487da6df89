use thiserror::Error;

/// Errors surfaced by the numerical routines.
#[derive(Debug, Error)]
pub enum FracError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("overflow: {0}")]
    Overflow(String),
    #[error("resolvent singular at mode {mode}: lambda^alpha coincides with eigenvalue {eigenvalue}")]
    Singular { mode: usize, eigenvalue: String },
    #[error("unsupported operator: {0}")]
    UnsupportedOperator(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("off-grid shift: 1/dt = {inv_dt} is not an integer number of steps")]
    OffGridShift { inv_dt: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, FracError>;
