//! Library side of the `dissect` command: arrangement files in, reports out.

pub mod commands;
pub mod input;
pub mod report;

pub use commands::{CliError, Settings};
pub use input::{parse, ArrangementFile, InputError};
pub use report::{Check, Report};
