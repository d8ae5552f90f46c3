use thiserror::Error;

/// Errors raised by the sequence library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A precondition on the input parameters does not hold.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested field or sequence exceeds the configured size cap.
    #[error("capacity exceeded: {what} = {requested} exceeds the limit {limit}")]
    Capacity {
        what: &'static str,
        requested: u64,
        limit: u64,
    },

    /// Malformed serialized input.
    #[error("parse error: {0}")]
    Parse(String),

    /// Two predictors that both apply to the same quantity disagree.
    #[error("predictors disagree on {quantity}: {first} vs {second}")]
    PredictorDisagreement {
        quantity: String,
        first: String,
        second: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parameter(msg.into()))
}
