//! Verification suites and subcommands behind the `umrow` binary.

pub mod commands;
pub mod config;
pub mod report;
pub mod suites;

pub use config::{parse_field, Suite, SuiteConfig};
pub use report::{CaseResult, Report, Status};
pub use suites::run_suite;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error(transparent)]
    Core(#[from] umrow_core::Error),
}

impl CliError {
    /// 2 for usage and configuration problems, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            _ => 1,
        }
    }
}
