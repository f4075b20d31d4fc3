//! JSON formats and command implementations behind the `ellsurf` binary.

pub mod commands;
pub mod formats;
pub mod verify;

pub use commands::{Command, Outcome};
