//! File format and command dispatch for the `semihopf` binary.

pub mod commands;
pub mod error;
pub mod format;

pub use commands::{run, Cli, Output};
pub use error::{CliError, CliResult};
