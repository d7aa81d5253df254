use thiserror::Error;

/// Errors raised by parsing, membership checks, and the bijection inverses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed text `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("invalid Frobenius symbol: {0}")]
    Frobenius(String),

    #[error("element kind `{found}` does not match family `{family}`")]
    ShapeMismatch { family: String, found: &'static str },

    #[error("`{element}` is not a member of `{family}`")]
    NotMember { family: String, element: String },

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("weight {n} exceeds the enumeration ceiling {ceiling}")]
    CeilingExceeded { n: u32, ceiling: u32 },

    #[error("invalid input to {op}: {reason}")]
    Domain { op: &'static str, reason: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(op: &'static str, reason: impl Into<String>) -> Error {
    Error::Domain {
        op,
        reason: reason.into(),
    }
}

pub(crate) fn parse_err(token: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        token: token.to_string(),
        reason: reason.into(),
    }
}
