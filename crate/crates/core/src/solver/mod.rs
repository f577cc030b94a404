//! Fully discrete scheme: L1 in time, product integration plus Bernstein
//! collocation in space.

mod assembly;
mod grid;
mod march;
mod norms;
mod problem;

pub use assembly::{assemble, assemble_entrywise, SystemMatrices, MIN_PIVOT};
pub use grid::Grid;
pub use march::{rhs, solve, solve_with, step, SolutionHistory, RESIDUAL_TOL};
pub use norms::{continuous_l2_error, error_norms, error_norms_at, ErrorNorms};
pub use problem::{ForcingFn, InitialFn, ProblemSpec, BOUNDARY_COMPAT_TOL};
