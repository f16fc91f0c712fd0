use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    Dimension { left: usize, right: usize },

    #[error("pairing or reflection against the zero weight")]
    ZeroDivisor,

    #[error("invalid case parameters: {0}")]
    Parameter(String),

    #[error("weight is not a scalar parameter: inner product with Levi root {root} is {value}")]
    NotScalar { root: String, value: String },

    #[error("scan window too small: {0}")]
    InsufficientWindow(String),

    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
