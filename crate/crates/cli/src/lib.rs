//! File formats, reports and the `triprofile` command-line driver on top of
//! `triprofile-core`.

pub mod cli;
mod error;
pub mod io;
pub mod report;
pub mod sweep;
pub mod verify;

pub use crate::error::{CliError, Result};
