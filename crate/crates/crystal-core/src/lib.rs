//! Letters, words and tableaux of the `gl_inf` crystals `B` and `B^dual`, the
//! tensor product rule, and brute-force component decomposition.

mod decompose;
mod element;
mod letter;
mod tableau;
mod weight;

pub use decompose::{census, decompose_components, is_equivalent, Component, CrystalError};
pub use element::{
    dual_word, eps, highest_in_colors, lower, phi, raise, tensor_eps, tensor_lower, tensor_phi,
    tensor_raise, weight, weyl_reflect, Element,
};
pub use letter::{Letter, Word};
pub use tableau::{enumerate_sst, sst_words, tableau_word, Tableau};
pub use weight::Weight;
