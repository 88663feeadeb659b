use thiserror::Error;

/// Errors raised by the library.
///
/// Algorithmic "no answer" outcomes (a Prony window that does not fit, an
/// integer logarithm outside the window) are modelled with `Option`; this
/// type is for precondition violations and for decoders that end with an
/// empty candidate list.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotAnOddPrime(u64),
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("operands belong to different fields (p = {0} and p = {1})")]
    FieldMismatch(u64, u64),
    #[error("invalid base point: {0}")]
    InvalidBasePoint(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("could not select base points: {0}")]
    SelectionExhausted(String),
    #[error("evaluation of a Laurent polynomial with negative degrees at zero")]
    PoleAtZero,
    #[error("bivariate system is not zero-dimensional (resultant vanishes)")]
    DegenerateSystem,
    #[error("decoding failed: no sparse interpolant satisfies the error bound")]
    DecodeFailed,
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
