//! Numerical solver for the Caputo space-time fractional
//! advection-dispersion equation on the unit interval
//!
//! `D_t^α u = κ₁ D_x^β u − κ₂ D_x^γ u + h`, `u(0,t) = u(1,t) = 0`, `u(x,0) = g(x)`,
//!
//! with `α, γ ∈ (0,1)` and `β ∈ (1,2)`.
//!
//! The scheme discretizes time with the L1 formula, approximates the
//! spatial Caputo derivatives by product integration of piecewise-linear
//! interpolants of `u'` and `u''`, and represents each time level in a
//! Bernstein basis collocated at the uniform interior nodes. Every time
//! step then reduces to one dense solve against a matrix that is
//! factorized once.
//!
//! ```no_run
//! use fade_core::prelude::*;
//!
//! let case = build_case(Example::Example1, CaseParams::example1()).unwrap();
//! let grid = Grid::new(8, 20, 1.0).unwrap();
//! let history = solve(case.spec(), &grid).unwrap();
//! let norms = error_norms(&history, |x, t| case.exact(x, t), &grid);
//! println!("E2 = {:.3e}, Einf = {:.3e}", norms.l2, norms.linf);
//! ```

pub mod bernstein;
pub mod error;
pub mod fractional;
pub mod gamma;
pub mod pi;
pub mod quadrature;
pub mod selftest;
pub mod solver;
pub mod verification;

pub use error::{FadeError, Result};
pub use fractional::{FracOrder, L1Weights, OrderKind};
pub use pi::PIWeightTable;
pub use solver::{ErrorNorms, Grid, ProblemSpec, SolutionHistory, SystemMatrices};
pub use verification::{CaseParams, ConvergenceReport, Example, ManufacturedCase};

pub mod prelude {
    pub use crate::bernstein::{eval_basis, eval_series, BernsteinBasis};
    pub use crate::error::{FadeError, Result};
    pub use crate::fractional::{FracOrder, OrderKind};
    pub use crate::solver::{assemble, error_norms, solve, Grid, ProblemSpec};
    pub use crate::verification::{
        build_case, run_convergence, CaseParams, Example, ManufacturedCase, Refinement,
    };
}
