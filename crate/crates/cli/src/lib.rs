//! Command-line front end for `copula-design`.
//!
//! The binary `copdesign` is a thin clap wrapper around [`commands`]; every
//! command writes human-readable output to a caller-supplied writer and
//! returns an [`ExitStatus`], so the commands are testable in-process.

pub mod commands;
pub mod config;
pub mod design_file;
pub mod output;
pub mod published;
pub mod repro;

use copula_design::Error;
use std::fmt;

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Ok = 0,
    InputError = 1,
    NumericalError = 2,
    NotConverged = 3,
    NotCertified = 4,
    ReproMismatch = 5,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    /// Unreadable or invalid input: exit 1.
    Input(String),
    /// Failure to write an output file: exit 1.
    Io(String),
    /// Singular or degenerate numerics: exit 2.
    Numerical(String),
}

impl CliError {
    pub fn status(&self) -> ExitStatus {
        match self {
            CliError::Input(_) | CliError::Io(_) => ExitStatus::InputError,
            CliError::Numerical(_) => ExitStatus::NumericalError,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
            CliError::Numerical(m) => write!(f, "numerical error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::SingularDesign
            | Error::DegenerateInformation { .. }
            | Error::Quadrature { .. }
            | Error::Consistency { .. }
            | Error::Initialization => CliError::Numerical(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}
