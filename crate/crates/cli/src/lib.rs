//! Instance files, the command surface and reports.

pub mod commands;
pub mod instance;
pub mod report;

pub use commands::{run, Command, Options};
pub use instance::{parse_field, Instance, UniverseSpec};
pub use report::{CheckLine, Format, Report, Table};
