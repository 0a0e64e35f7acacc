//! Command implementations behind the `numsg` binary.
//!
//! Each `cmd_*` function builds a [`ReportDocument`]; [`render`] turns it
//! into a human table, JSON or CSV. Nothing here reads the clock unless the
//! caller asks for timing, so identical inputs give identical bytes.

mod commands;
mod input;
mod render;
mod report;
pub mod repro;

use std::fmt;

pub use commands::{cmd_decompose, cmd_info, cmd_repro, cmd_witness};
pub use input::Descriptor;
pub use render::{render, repro_footer, repro_line};
pub use report::{
    BoundsDoc, DecompositionDoc, InputDoc, InvariantsDoc, ReportDocument, ReproDoc, ReproRow,
    SemigroupDoc, WitnessDoc, XiDoc,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_REPRO_FAILURE: u8 = 1;
pub const EXIT_INVALID_INPUT: u8 = 2;
pub const EXIT_CAP_EXCEEDED: u8 = 3;

pub const DEFAULT_CAP: usize = 5_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    /// Minimum number of irreducible components.
    Exact,
    /// One component per BPF element.
    Construct,
    /// Lower bound h and upper bound m.
    Bounds,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Construct => "construct",
            Mode::Bounds => "bounds",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Human,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    InvalidInput(String),
    CapExceeded { partial: usize, cap: usize },
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::InvalidInput(_) => EXIT_INVALID_INPUT,
            CliError::CapExceeded { .. } => EXIT_CAP_EXCEEDED,
            CliError::Failure(_) => EXIT_REPRO_FAILURE,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            CliError::CapExceeded { partial, cap } => write!(
                f,
                "oversemigroup enumeration reached the cap ({partial} members, cap {cap}); \
                 raise --cap or use --mode bounds"
            ),
            CliError::Failure(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<numsg::Error> for CliError {
    fn from(e: numsg::Error) -> Self {
        match e {
            numsg::Error::CapExceeded { partial, cap } => CliError::CapExceeded { partial, cap },
            numsg::Error::InternalVerificationFailed(_) => CliError::Failure(e.to_string()),
            other => CliError::InvalidInput(other.to_string()),
        }
    }
}
