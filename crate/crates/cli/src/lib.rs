//! Command-line front end: ideal files, JSON reports and the self-test.

pub mod commands;
pub mod error;
pub mod idealfile;
pub mod oracle;
pub mod report;
pub mod suite;

pub use error::{exit, CliError, CliResult};
pub use idealfile::IdealFile;
pub use report::RunReport;
