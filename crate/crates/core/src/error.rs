use crate::geom::Point;

/// Errors raised by the geometry primitives and the solvers.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The leading and constant coefficients of the equilibrium quartic
    /// vanish because the two weight magnitudes are equal.
    #[error("degenerate quartic coefficients: |B1| = |B4|")]
    DegenerateCoefficients,

    /// The configuration is absorbed at a vertex (1-based), so a floating
    /// closed form does not apply.
    #[error("configuration is not floating: optimum absorbed at vertex A{vertex}")]
    NotFloating { vertex: usize },

    #[error("configuration outside the floating regime: {0}")]
    OutsideFloatingRegime(String),

    #[error("wrong case: {0}")]
    WrongCase(String),

    /// More than one vertex passes the absorbed test, which contradicts
    /// uniqueness of the optimum and signals a numerical tie.
    #[error("inconsistent classification: vertices A{first} and A{second} both absorb")]
    InconsistentClassification { first: usize, second: usize },

    #[error(
        "no convergence after {iterations} iterations (last iterate {last}, residual {residual:e})"
    )]
    NonConvergence {
        last: Point,
        residual: f64,
        iterations: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
