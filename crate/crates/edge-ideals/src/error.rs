use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    /// Malformed graph6 input, with the byte offset of the first bad byte.
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("domain error: {0}")]
    Domain(String),

    /// A computation exceeded one of the desk-scale guards. The caller can
    /// retry with guards overridden if it really wants the answer.
    #[error("resource guard exceeded: {what} = {value} > {limit} (pass --guard-override to force)")]
    Resource {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("usage error: {0}")]
    Usage(String),

    /// Homology ranks disagreed between two coefficient fields. This is
    /// always surfaced, never resolved silently.
    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
