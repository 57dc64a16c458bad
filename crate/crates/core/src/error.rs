use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Irreducibility of the defining polynomial could not be decided.
    #[error("irreducibility not proved: {0}")]
    Unverified(String),
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    /// A certified comparison or certification stayed inconclusive at the
    /// precision cap.
    #[error("precision cap of {bits} bits exceeded: {context}")]
    Precision { bits: u32, context: String },
    #[error("not found: {0}")]
    NotFound(String),
    /// A configured resource cap (enumeration size) was exceeded.
    #[error("resource cap exceeded: {0}")]
    Cap(String),
    /// A result failed its own verification. Indicates a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
