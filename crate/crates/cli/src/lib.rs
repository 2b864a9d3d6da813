//! Command-line front end for the crystal LR workspace.

pub mod suites;

mod commands;
mod output;

pub use commands::{run, Outcome};
pub use output::render_table;
