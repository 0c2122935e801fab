//! Command-line front end for `ucm-core`: parameter sweeps, figure data and
//! oracle verification runs.

pub mod app;
pub mod commands;
pub mod decimal;
pub mod table;

pub use app::{run, Format, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED};
