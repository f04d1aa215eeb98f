use thiserror::Error;

/// Errors raised by the symbolic core, the tensor engine and the structure checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero function")]
    DivisionByZero,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("pole at point: denominator `{0}` vanishes")]
    PoleAtPoint(String),
    #[error("chart mismatch: {0}")]
    ChartMismatch(String),
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("invalid chart: {0}")]
    InvalidChart(String),
    #[error("metric determinant is identically zero")]
    DegenerateMetric,
    #[error("slot mismatch: {0}")]
    SlotMismatch(String),
    #[error("structure is not contact: {0}")]
    NotContact(String),
    #[error("deformation parameter must be nonzero")]
    ZeroParameter,
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
