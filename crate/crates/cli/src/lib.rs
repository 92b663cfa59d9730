//! Library side of the `tasaki` command: the JSON document formats and the
//! subcommands, usable without spawning the binary.

pub mod commands;
pub mod document;
pub mod report;

pub use commands::CliError;
pub use document::{ScalarMode, StructureDocument};
pub use report::ReportDocument;
