//! Time marching with the L1 history sum.

use nalgebra::DVector;

use crate::bernstein::eval_series;
use crate::error::{FadeError, Result};
use crate::fractional::{l1_from_lags, l1_lag_weights, L1Weights};
use crate::solver::{assemble, Grid, ProblemSpec, SystemMatrices};

/// Relative residual accepted after each linear solve.
pub const RESIDUAL_TOL: f64 = 1e-10;

/// Bernstein coefficients and interior node values for every time level.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionHistory {
    grid: Grid,
    /// `coeff[k-1]` holds `c_{1..N-1, k}` for `k = 1..=M`.
    coeff: Vec<Vec<f64>>,
    /// `node_values[k]` holds `u_k(x_1..x_{N-1})` for `k = 0..=M`.
    node_values: Vec<Vec<f64>>,
}

impl SolutionHistory {
    /// History seeded with `u_0 = g` at the interior nodes.
    pub fn new(spec: &ProblemSpec, grid: &Grid) -> Self {
        let initial = grid
            .interior_nodes()
            .into_iter()
            .map(|x| spec.initial(x))
            .collect();
        Self {
            grid: *grid,
            coeff: Vec::with_capacity(grid.steps()),
            node_values: {
                let mut v = Vec::with_capacity(grid.steps() + 1);
                v.push(initial);
                v
            },
        }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    /// Index of the newest stored level.
    pub fn latest_level(&self) -> usize {
        self.node_values.len() - 1
    }

    /// Coefficients at level `k ≥ 1`.
    pub fn coefficients(&self, k: usize) -> Option<&[f64]> {
        k.checked_sub(1)
            .and_then(|i| self.coeff.get(i))
            .map(Vec::as_slice)
    }

    /// Interior node values at level `k`.
    pub fn node_values(&self, k: usize) -> Option<&[f64]> {
        self.node_values.get(k).map(Vec::as_slice)
    }

    pub fn final_node_values(&self) -> &[f64] {
        self.node_values.last().expect("history always holds u_0")
    }

    /// `u_k(x)` from the Bernstein expansion; level 0 has no expansion.
    pub fn eval(&self, k: usize, x: f64) -> Result<f64> {
        let c = self.coefficients(k).ok_or_else(|| {
            FadeError::Contract(format!("no Bernstein coefficients stored for level {k}"))
        })?;
        eval_series(c, x)
    }

    pub(crate) fn push(&mut self, coeff: Vec<f64>, values: Vec<f64>) {
        self.coeff.push(coeff);
        self.node_values.push(values);
    }
}

/// Right-hand side for the solve at level `k+1` (with `k = weights.level()`):
///
/// `f_r = μ (u_k(x_r) − Σ_{j<k} a_{k,j} (u_{j+1}(x_r) − u_j(x_r))) + h(x_r, t_{k+1})`.
pub fn rhs(
    spec: &ProblemSpec,
    grid: &Grid,
    weights: &L1Weights,
    history: &SolutionHistory,
) -> Result<Vec<f64>> {
    let k = weights.level();
    if history.latest_level() < k {
        return Err(FadeError::Contract(format!(
            "right-hand side for level {} needs history through level {k}, have {}",
            k + 1,
            history.latest_level()
        )));
    }
    let a = weights.a();
    let t_next = grid.time(k + 1);
    let mut f = history.node_values[k].clone();
    for (aj, pair) in a.iter().zip(history.node_values[..=k].windows(2)) {
        let (lo, hi) = (&pair[0], &pair[1]);
        for (fr, (u_hi, u_lo)) in f.iter_mut().zip(hi.iter().zip(lo)) {
            *fr -= aj * (u_hi - u_lo);
        }
    }
    for (r, fr) in f.iter_mut().enumerate() {
        *fr = weights.mu() * *fr + spec.forcing(grid.node(r + 1), t_next);
    }
    Ok(f)
}

/// Solves `A c = f` with the stored factorization and verifies the residual.
pub fn step(matrices: &SystemMatrices, rhs: &[f64]) -> Result<Vec<f64>> {
    if rhs.len() != matrices.dim() {
        return Err(FadeError::Contract(format!(
            "right-hand side has length {}, system has dimension {}",
            rhs.len(),
            matrices.dim()
        )));
    }
    let f = DVector::from_column_slice(rhs);
    let c = matrices
        .lu()
        .solve(&f)
        .ok_or_else(|| FadeError::Solver("LU solve failed on a singular factor".into()))?;
    let residual = (matrices.system() * &c - &f).amax();
    let scale = f.amax();
    if residual > RESIDUAL_TOL * scale {
        return Err(FadeError::Solver(format!(
            "residual {residual:.3e} exceeds {RESIDUAL_TOL:.0e} x |f| = {:.3e}",
            RESIDUAL_TOL * scale
        )));
    }
    Ok(c.as_slice().to_vec())
}

/// Runs all `M` steps from `u_0 = g`.
pub fn solve(spec: &ProblemSpec, grid: &Grid) -> Result<SolutionHistory> {
    let matrices = assemble(spec, grid)?;
    solve_with(spec, grid, &matrices)
}

/// As [`solve`], reusing an existing assembly.
pub fn solve_with(
    spec: &ProblemSpec,
    grid: &Grid,
    matrices: &SystemMatrices,
) -> Result<SolutionHistory> {
    let lags = l1_lag_weights(spec.alpha(), grid.steps());
    let mut history = SolutionHistory::new(spec, grid);
    for k in 0..grid.steps() {
        let weights = l1_from_lags(spec.alpha(), k, &lags, matrices.mu());
        let f = rhs(spec, grid, &weights, &history)?;
        let c = step(matrices, &f)?;
        let values = (matrices.collocation() * DVector::from_column_slice(&c))
            .as_slice()
            .to_vec();
        history.push(c, values);
    }
    Ok(history)
}
