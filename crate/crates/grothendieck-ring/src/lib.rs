//! The ring of z-polynomials, its Ore extension by the operators `s^+-_n`,
//! the derivation actions and the Schur-shape operators built from them.

mod delem;
mod error;
mod ops;
mod relem;
mod sign;

pub use delem::{d_multiply, DElem, DKey};
pub use error::RingError;
pub use ops::{
    annihilator_relations, class_size, h_operator, mn_character, s_operator, s_operator_delem, OpPoly, Relation, SOp,
};
pub use relem::{expand_in_z_schur, p_action, z_schur, z_skew_schur, RElem};
pub use sign::Sign;

/// The involution `z_k -> z_{-k}`, `s^+-_n -> s^-+_n`.
pub fn omega(a: &DElem) -> DElem {
    a.omega()
}
