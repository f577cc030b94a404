use crate::error::Result;
use crate::quadrature;
use crate::solver::{Grid, SolutionHistory};

/// Discrete error norms over the interior nodes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorNorms {
    /// `sqrt(h Σ_r e_r²)`.
    pub l2: f64,
    /// `max_r |e_r|`.
    pub linf: f64,
}

/// Norms of `e_r = u(x_r, t_k) − u_h(x_r, t_k)` at level `k`.
pub fn error_norms_at<F>(history: &SolutionHistory, exact: F, grid: &Grid, k: usize) -> ErrorNorms
where
    F: Fn(f64, f64) -> f64,
{
    let values = history
        .node_values(k)
        .unwrap_or_else(|| panic!("level {k} not present in history"));
    let t = grid.time(k);
    let errors = values
        .iter()
        .enumerate()
        .map(|(i, &uh)| exact(grid.node(i + 1), t) - uh);
    norms_of(errors, grid.h())
}

/// Norms at the final time `T`.
pub fn error_norms<F>(history: &SolutionHistory, exact: F, grid: &Grid) -> ErrorNorms
where
    F: Fn(f64, f64) -> f64,
{
    error_norms_at(history, exact, grid, grid.steps())
}

/// `‖u(·, t_k) − u_h(·, t_k)‖` in continuous `L²(0, 1)`, integrating the
/// Bernstein expansion between the nodes. Diagnostic only; reports use
/// the nodal norms.
pub fn continuous_l2_error<F>(history: &SolutionHistory, exact: F, k: usize) -> Result<f64>
where
    F: Fn(f64, f64) -> f64,
{
    let grid = history.grid();
    let t = grid.time(k);
    let n = grid.cells();
    let mut total = 0.0;
    // integrate cell by cell so the panels line up with the grid
    for r in 0..n {
        let (a, b) = (grid.node(r), grid.node(r + 1));
        total += quadrature::integrate(
            |x| {
                let e = exact(x, t) - history.eval(k, x).unwrap_or(f64::NAN);
                e * e
            },
            a,
            b,
            1e-18,
        )?;
    }
    Ok(total.sqrt())
}

pub(crate) fn norms_of<I: IntoIterator<Item = f64>>(errors: I, h: f64) -> ErrorNorms {
    let (sq, max) = errors.into_iter().fold((0.0, 0.0_f64), |(sq, max), e| {
        (sq + e * e, max.max(e.abs()))
    });
    ErrorNorms {
        l2: (h * sq).sqrt(),
        linf: max,
    }
}
