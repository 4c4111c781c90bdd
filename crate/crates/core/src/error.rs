use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("generator {index} is not weighted-homogeneous")]
    NotHomogeneous { index: usize },

    #[error("Buchberger aborted after {limit} critical pairs")]
    PairLimitExceeded { limit: usize },

    #[error("the zero polynomial has no square-free decomposition")]
    ZeroPolynomial,

    #[error("root finder did not converge after {iterations} iterations (worst residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("class is not homogeneous")]
    Inhomogeneous,

    #[error("expected a class of codimension {expected}, found {found}")]
    WrongCodimension { expected: usize, found: usize },

    #[error("unknown class label `{0}`")]
    UnknownLabel(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("singular matrix")]
    Singular,

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("data file error: {0}")]
    Data(String),
}

pub type Result<T> = std::result::Result<T, Error>;
