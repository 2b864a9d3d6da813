use crystal_core::CrystalError;
use shapes::ShapeError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LrError {
    #[error("expression mixes positive and negative levels")]
    MixedLevel,
    #[error("negative level {0} has no extremal class")]
    NegativeLevel(i64),
    #[error("weight has nonzero level {0}")]
    NonzeroLevel(i64),
    #[error("window [{lo},{hi}] too small: {reason}")]
    WindowTooSmall { lo: i64, hi: i64, reason: String },
    #[error("parse error at {token:?}: {msg}")]
    Parse { token: String, msg: String },
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Crystal(#[from] CrystalError),
}
