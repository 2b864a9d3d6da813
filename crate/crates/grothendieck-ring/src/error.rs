use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("expected length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("input is not homogeneous of degree {0}")]
    NotHomogeneous(usize),
    #[error("expansion does not terminate inside the index bound (reached {0})")]
    NotFinite(String),
    #[error("non-integral operator coefficient")]
    NotIntegral,
}
