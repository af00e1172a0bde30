use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed token `{0}` (expected s<k> or s<k>^<e>)")]
    MalformedToken(String),
    #[error("generator index {0} out of range 0..5")]
    IndexOutOfRange(i64),
    #[error("zero exponent")]
    ZeroExponent,
    #[error("unknown curve `{0}` (expected e1, e2 or e3)")]
    UnknownCurve(String),
    #[error("malformed weight vector: {0}")]
    MalformedVector(String),
    #[error("weight overflow while applying {0}")]
    Overflow(String),
    #[error("expected a single closed curve, found {0} components")]
    NotConnected(usize),
    #[error("malformed curve: {0}")]
    MalformedCurve(String),
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
