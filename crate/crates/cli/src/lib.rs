//! Batch front-end for `reltak`: parses ideals, complexes and graphs and emits reports.

pub mod args;
pub mod commands;
pub mod config;
pub mod parse;
mod table;

pub use args::Cli;
pub use commands::run;
pub use config::{Fault, RunConfig};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: String,
        #[source]
        source: parse::ParseError,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] reltak::Error),
    #[error("cannot write output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    /// 2 for failed cross-checks, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_invariant_violation() => 2,
            _ => 1,
        }
    }
}
