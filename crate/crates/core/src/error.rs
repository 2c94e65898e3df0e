use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: g = {left} vs g = {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("truncation order mismatch: K = {left} vs K = {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("{what} = {value} out of range ({expected})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        expected: String,
    },

    #[error("exponential needs a nilpotent constant term, found scalar part {0}")]
    NonNilpotentConstant(String),

    #[error("logarithm needs constant term 1 + nilpotent, found scalar part {0}")]
    NonUnitConstant(String),

    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),

    #[error("invalid locus: {0}")]
    InvalidLocus(String),

    #[error("division by a vanishing coefficient: {0}")]
    VanishingCoefficient(String),

    #[error("identity check failed: {0}")]
    IdentityMismatch(String),

    #[error("{0}")]
    Malformed(String),
}

pub(crate) fn out_of_range(what: &'static str, value: i64, expected: impl Into<String>) -> Error {
    Error::OutOfRange {
        what,
        value,
        expected: expected.into(),
    }
}
