//! Weighted Fermat-Torricelli points of four planar points.
//!
//! The optimum minimizes `Σ B_i·‖X − A_i‖`. Besides a general Weiszfeld
//! solver, closed forms are provided for two symmetric weight patterns:
//!
//! * `B1 = B2`, `B3 = B4` on a square ([`square`]), and on convex
//!   quadrilaterals through angle transfer ([`solver::solve_pair_case`]);
//! * `B1 = B3`, `B2 = B4` on convex quadrilaterals, where the optimum is the
//!   crossing of the diagonals ([`solver::solve_diagonal_case`]).
//!
//! Stationary points of the signed-weight ("complementary") objective on the
//! square are available through [`square::solve_square_complementary`].

pub mod error;
pub mod geom;
pub mod quartic;
pub mod solver;
pub mod square;

pub use error::{Error, Result};
pub use geom::{PlanarVector, Point};
pub use quartic::{QuarticPoly, RealRoots};
pub use solver::{
    classify, equilibrium_residual, objective, solve, solve_with, weiszfeld, CaseTag, Method,
    MethodChoice, QuadProblem, Solution, SolveOptions,
};
pub use square::{AngleSet, SquareProblem};
