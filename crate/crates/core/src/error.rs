use thiserror::Error;

/// Crate-wide result type.
pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A parameter was outside its documented domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The data cannot constrain the requested parameters.
    #[error("non-identifiable data: {0}")]
    NonIdentifiable(String),

    /// A trace covers less than half a scan period, so the extrema of the
    /// phase sweep are not guaranteed to appear in the data.
    #[error("trace spans {spanned_s} s but fitting needs at least half a scan period ({required_s} s)")]
    InsufficientSpan { spanned_s: f64, required_s: f64 },

    /// A measured value is inconsistent with the assumed loss floor.
    #[error("unphysical input: {0}")]
    UnphysicalInput(String),

    /// Malformed CSV input.
    #[error("parse error at line {line}: {message}")]
    Parse { line: u64, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
