use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid set: {0}")]
    InvalidSpec(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("no analytic certificate: {0}")]
    NoAnalyticCertificate(String),
    #[error("not fractionally dense: {0}")]
    NotFractionallyDense(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("bound exhausted at {bound}: {hint}")]
    BoundExhausted { bound: u64, hint: String },
    #[error("too large: {0}")]
    TooLarge(String),
    #[error("closed form mismatch: {0}")]
    ClosedFormMismatch(String),
}
