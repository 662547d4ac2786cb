use thiserror::Error;

use crate::ring::parse::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable set mismatch: [{left}] vs [{right}]")]
    VarSetMismatch { left: String, right: String },

    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),

    #[error("variable `{0}` must have degree >= 1")]
    ZeroDegree(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("inhomogeneous polynomial: `{first}` and `{second}` have different degrees")]
    Inhomogeneous { first: String, second: String },

    #[error("substitution for `{var}` must be homogeneous of degree {expected}, found {found}")]
    DegreeViolation {
        var: String,
        expected: u32,
        found: String,
    },

    #[error("not symmetric in ({roots}): coefficient of `{term}` differs from its swapped image")]
    NotSymmetric { roots: String, term: String },

    #[error("series constant term must be 1, found `{0}`")]
    ConstantTerm(String),

    #[error("series entry {index} must be homogeneous of degree {index}")]
    SeriesDegree { index: usize },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("kernel in degree {degree} has free rank {free_rank}; refusing to enumerate")]
    InfiniteKernel { degree: u32, free_rank: usize },

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}
