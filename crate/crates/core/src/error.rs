use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors produced anywhere in the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed permutation `{text}`: {reason}")]
    MalformedPermutation { text: String, reason: String },

    #[error("resource limit: {0}")]
    ResourceLimit(String),

    #[error("{tau} is outside the domain of {family}: {reason}")]
    NotInDomain {
        family: &'static str,
        tau: String,
        reason: String,
    },

    #[error("pattern set {0} is not a subset of S3")]
    NotSubsetOfS3(String),

    #[error("division by the zero generating function")]
    DivisionByZero,

    #[error("{0} is not expandable as a power series (denominator vanishes at 0)")]
    NotPowerSeries(String),

    #[error("coefficient {index} of {gf} is not an integer")]
    NonIntegralCoefficient { gf: String, index: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
