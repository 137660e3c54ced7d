use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter is outside the range the formula is valid for.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// A function was evaluated at a pole or outside its domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The request is outside the hypotheses the closed forms were derived under.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// The caller broke a documented precondition (mismatched sizes, unequal weights, ...).
    #[error("contract violation: {0}")]
    Contract(String),

    /// An exact result was requested but the value is transcendental.
    #[error("not representable exactly: {0} (use high-precision mode)")]
    NotExact(String),

    /// Something that must not happen for valid input did happen.
    #[error("internal error: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
