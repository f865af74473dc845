//! File formats, parallel drivers and report rendering around [`rmarith_core`].
//!
//! The binary in `main.rs` is a thin clap layer over [`commands`]; everything
//! it prints is a [`report`] value, so the same data can be rendered as a
//! table, JSON or CSV and parsed back.

pub mod cache;
pub mod commands;
pub mod count;
pub mod report;
pub mod scan;

pub use cache::ClassNumberCache;

use rmarith_core::Error as CoreError;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const INPUT: i32 = 2;
    pub const SEARCH_LIMIT: i32 = 3;
    pub const INTERNAL: i32 = 4;
}

/// A failure that maps onto one of the documented exit codes.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad value for a named flag.
    #[error("{flag}: {message}")]
    Flag { flag: &'static str, message: String },
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl CliError {
    pub fn flag(flag: &'static str, message: impl std::fmt::Display) -> Self {
        CliError::Flag {
            flag,
            message: message.to_string(),
        }
    }

    /// Attaches `flag` to input errors raised by the core.
    pub fn at(flag: &'static str) -> impl Fn(CoreError) -> CliError {
        move |e| match e {
            CoreError::SearchLimitExceeded { .. } => CliError::Core(e),
            e => CliError::flag(flag, e),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Flag { .. } => exit::INPUT,
            CliError::Core(CoreError::SearchLimitExceeded { .. }) => exit::SEARCH_LIMIT,
            CliError::Core(CoreError::DiscriminantMismatch(..)) => exit::INTERNAL,
            CliError::Core(_) => exit::INPUT,
            CliError::Internal(_) => exit::INTERNAL,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
