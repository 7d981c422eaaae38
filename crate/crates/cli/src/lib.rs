//! Library side of the qgamma command-line tool: file formats, the
//! theorem-verification driver, the small-structure search, and report
//! rendering. The binary in `main.rs` is a thin wrapper over these.

pub mod error;
pub mod formats;
pub mod report;
pub mod search;
pub mod verify;

pub use error::CliError;
