//! IO, reports, file formats and the command implementations behind the
//! `spincent` binary.

pub mod commands;
pub mod config;
pub mod error;
pub mod export;
pub mod phi;
pub mod report;

pub use error::CliError;
