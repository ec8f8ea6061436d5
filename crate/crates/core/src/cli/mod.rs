//! Command-line front end. Exit codes: 0 success, 1 usage error,
//! 2 numerical failure, 3 unexpected discrepancy under `verify --strict`.

mod args;
mod commands;
mod parse;

use std::ffi::OsString;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

pub use args::{Cli, Command, OUT_DIR_ENV};
pub use commands::fig1_table;
pub use parse::{parse_grid, parse_index_range, parse_list_or_grid};

use crate::error::Error;

pub const EXIT_USAGE: u8 = 1;
pub const EXIT_NUMERICAL: u8 = 2;
pub const EXIT_DISCREPANCY: u8 = 3;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Numerical(String),
    Discrepancy(usize),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Numerical(_) => EXIT_NUMERICAL,
            CliError::Discrepancy(_) => EXIT_DISCREPANCY,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(s) => write!(f, "usage error: {s}"),
            CliError::Numerical(s) => write!(f, "{s}"),
            CliError::Discrepancy(n) => write!(f, "{n} unexpected discrepancies"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain { .. } | Error::ZeroPochhammer { .. } => CliError::Usage(e.to_string()),
            Error::NumericalFailure { .. } | Error::Overflow { .. } => {
                CliError::Numerical(e.to_string())
            }
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(format!("i/o: {e}"))
    }
}

/// Parses `argv`, runs the command writing results to `stdout`, and maps the
/// outcome to an exit code.
pub fn run_with<I, T>(argv: I, stdout: &mut dyn std::io::Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
        }
    };
    match commands::dispatch(&cli, stdout) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("landau-wehrl: {e}");
            e.exit_code()
        }
    }
}

pub fn main() -> ExitCode {
    let mut out = std::io::stdout().lock();
    ExitCode::from(run_with(std::env::args_os(), &mut out))
}
