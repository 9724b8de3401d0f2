use thiserror::Error;

use crate::parse::ParseError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid ordering: {0}")]
    InvalidOrder(String),
    #[error("no leading term: zero polynomial")]
    ZeroPolynomial,
    #[error("overlap configuration does not match the given leading monomials")]
    StaleOverlap,
    #[error("not a skew 2-nomial ideal: {0}")]
    NotSkew2Nomial(String),
    #[error("generating set is not LM-reduced: {0}")]
    NotLmReduced(String),
    #[error("degree {deg} exceeds truncation degree {maxdeg}")]
    DegreeOverflow { deg: u32, maxdeg: u32 },
    #[error("skew multiplicativity violated: {0}")]
    NotSkewMultiplicative(String),
    #[error("hypothesis failed: {0}")]
    Hypothesis(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
