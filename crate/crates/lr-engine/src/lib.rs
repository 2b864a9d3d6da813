//! Closed-form decompositions of tensor products of extremal weight crystals and a
//! brute-force verifier on finite windows.

mod class;
mod error;
mod expr;
mod formulas;
mod verify;

pub use class::{Decomposition, ExtremalClass};
pub use error::LrError;
pub use expr::{Expr, Factor};
pub use formulas::{
    class_product, extremal_lr, hw_past_level0, hw_product, level0_canonical, level0_product, pieri_column,
    product, Side,
};
pub use verify::{verify_truncated, verify_with_caps, window_census, Caps, VerifyReport};
