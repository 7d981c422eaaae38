//! CLI-side errors. Anything here exits with code 2; discrepancies
//! found by a successful run exit with code 1.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum CliError {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown symbol {symbol:?} at line {line}")]
    UnknownSymbol { line: usize, symbol: String },

    #[error("line {line}: {source}")]
    CoreAt {
        line: usize,
        source: qgamma_core::Error,
    },

    #[error(transparent)]
    Core(#[from] qgamma_core::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, CliError>;
