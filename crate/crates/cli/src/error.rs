use std::fmt;

use fermat_quad::Error;

/// Malformed or degenerate input, or an invalid sweep range.
pub const EXIT_INPUT: u8 = 1;
/// A closed form was requested but does not apply.
pub const EXIT_NOT_APPLICABLE: u8 = 2;
/// The solver failed to converge or to verify its answer.
pub const EXIT_SOLVER: u8 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    pub fn solver(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_SOLVER,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidInput(_) | Error::DegenerateInput(_) => EXIT_INPUT,
            Error::DegenerateCoefficients
            | Error::NotFloating { .. }
            | Error::OutsideFloatingRegime(_)
            | Error::WrongCase(_) => EXIT_NOT_APPLICABLE,
            Error::InconsistentClassification { .. } | Error::NonConvergence { .. } => EXIT_SOLVER,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::input(e.to_string())
    }
}
