//! Library half of the `ftq` command-line tool: problem-file parsing, report
//! formatting, ratio sweeps and SVG rendering.

pub mod commands;
pub mod error;
pub mod input;
pub mod output;
pub mod render;
pub mod report;
pub mod sweep;

pub use error::{CliError, EXIT_INPUT, EXIT_NOT_APPLICABLE, EXIT_SOLVER};
pub use input::{parse_problem, read_problem, ProblemFile};
pub use report::{Format, Report};
