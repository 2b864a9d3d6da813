use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharError {
    #[error("expected {expected} variables, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("alphabet must be nonempty")]
    EmptyAlphabet,
    #[error("partition of length {len} does not fit in {nvars} variables")]
    TooLong { len: usize, nvars: usize },
    #[error("polynomial is not symmetric in its blocks (leading exponent {0:?})")]
    NotSymmetric(Vec<i64>),
    #[error("inexact division")]
    NotDivisible,
}
