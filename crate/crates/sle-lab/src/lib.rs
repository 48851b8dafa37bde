//! Library surface of the laboratory binary: argument types, command
//! implementations and the manifest format, exposed so integration tests can
//! drive the commands in-process.

pub mod cli;
pub mod commands;
pub mod manifest;

pub use cli::{Cli, Command};
pub use commands::CliError;
