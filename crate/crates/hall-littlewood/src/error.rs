use grothendieck_ring::RingError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HlError {
    #[error("truncation orders differ: {0} and {1}")]
    TruncationMismatch(u32, u32),
    #[error(transparent)]
    Ring(#[from] RingError),
}
