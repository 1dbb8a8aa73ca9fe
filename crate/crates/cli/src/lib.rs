//! Command-line front end: a small text format for relations and structures,
//! and the `relcat` commands built on it.

mod app;
pub mod emit;
pub mod manifest;
pub mod resolve;
pub mod syntax;

pub use app::{fixture_expectations, fixture_files, run, EXIT_CAP, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
