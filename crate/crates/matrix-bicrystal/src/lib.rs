//! Binary matrices with commuting row and column crystal structures, the
//! Maya-row models of level 0 and level 1, and the tableau embeddings.

mod bicrystal;
mod embed;
mod matrix;
mod maya;

pub use bicrystal::{bicrystal_components, BiComponent};
pub use embed::{embed_sigma, embed_tableau, embed_tau, rotate_dual, EmbedError};
pub use matrix::{BinaryMatrix, MatrixError, RowVec};
pub use maya::{MayaKind, MayaRow};
