use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    ZeroPolynomial,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("Laurent polynomial is not conjugate-reciprocal")]
    NotRealType,
    #[error("coefficient has nonzero mean; its antiderivative is not periodic")]
    NotPeriodic,
    #[error("both inputs are constant")]
    DegenerateInput,
    #[error("degree {degree} exceeds the configured maximum {max}")]
    DegreeTooLarge { degree: usize, max: usize },
    #[error("parse error: {0}")]
    Parse(String),
    /// A step the theory guarantees has failed. Always a bug.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

impl Error {
    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::InternalInconsistency(msg.into())
    }
}
