mod error;
mod shape_ops;
mod trelem;
mod vertex;

pub use error::HlError;
pub use shape_ops::{column_op, row_op};
pub use trelem::{SchurTerm, TRElem};
pub use vertex::{
    bar_commutes, bt_apply, bt_bar_apply, bt_commutator_check, bt_lambda_apply, bt_lambda_classes_apply,
    bt_word_action, bt_word_apply, raising_expansion, vertex_apply, Family, HLOperator, WordCache,
};
