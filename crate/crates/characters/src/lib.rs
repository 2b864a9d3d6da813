//! Laurent polynomial characters: Laurent Schur polynomials, branching,
//! Hall-Littlewood polynomials and Cauchy-series coefficient extraction.

mod cauchy;
mod error;
mod hl;
mod poly;
mod schur;

pub use cauchy::commuting_coefficient;
pub use error::CharError;
pub use hl::{hall_littlewood_p, hl_p_schur_expansion, kostka_foulkes_via_hl};
pub use poly::{Coeff, LaurentPoly, Poly, TLaurentPoly};
pub use schur::{
    alternant, block_schur, branch_split, div_vandermonde, expand_in_schur, laurent_schur, monomial_symmetric,
    schur_product, signed_permutations,
};
