use thiserror::Error;

/// Errors raised by the exact algebra, the representations and the contraction pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("valuation of zero is undefined")]
    ZeroValuation,
    #[error("pole of order {order} at q = 1")]
    PoleAtQ1 { order: i64 },
    #[error("pole of order {order} at q = 1 in entry ({row}, {col})")]
    PoleAtQ1Entry { row: usize, col: usize, order: i64 },
    #[error("evaluation point is a pole")]
    PoleAtPoint,
    #[error("invalid evaluation point: {0}")]
    InvalidPoint(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("element is not parity-homogeneous")]
    Inhomogeneous,
    #[error("exponent {0} is not an integer power of q^(1/2)")]
    NonIntegralExponent(String),
    #[error("{0} is not a half-integer")]
    NotHalfInteger(String),
    #[error("series does not terminate within {0} terms")]
    NonTerminating(usize),
    #[error("invalid series: {0}")]
    InvalidSeries(String),
    #[error("matrix is singular")]
    Singular,
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
