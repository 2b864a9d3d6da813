//! Partitions, generalized partitions, skew shapes and the classical
//! tableau counts built on them.

mod error;
mod gen;
mod kostka;
mod lr;
mod partition;
mod skew;
mod tpoly;

pub use error::ShapeError;
pub use gen::GenPartition;
pub use kostka::{charge, kostka_foulkes, kostka_number, ssyt_with_content};
pub use lr::{gen_lr_coefficient, gl_lr_coefficient, gl_product, lr_coefficient, lr_product};
pub use partition::Partition;
pub use skew::SkewShape;
pub use tpoly::TPoly;
