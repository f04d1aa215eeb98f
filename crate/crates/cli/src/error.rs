use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {reason}")]
    Io { path: String, reason: String },
    #[error("malformed document: {0}")]
    Json(String),
    #[error("`{field}`: {reason}")]
    Invalid { field: String, reason: String },
    #[error("{0}")]
    Usage(String),
}
