//! Assembly of the collocation system
//!
//! `(μ B − κ₁ W_β D₂ + κ₂ W_γ D₁) c_{k+1} = f_{k+1}`
//!
//! where `B` collocates the interior basis at the interior nodes, `D_p`
//! holds p-th derivatives of the interior basis at `x_0 .. x_{N-1}`, and
//! `W_η` holds the ν-scaled product-integration weights (row `r`,
//! columns `0..=r`).

use nalgebra::{DMatrix, Dyn, LU};

use crate::bernstein::{self, collocation_matrix, deriv_coeffs, derivative_matrices};
use crate::error::{FadeError, Result};
use crate::fractional::l1_scale;
use crate::pi::{pi_weights, PIWeightTable};
use crate::solver::{Grid, ProblemSpec};

/// Smallest pivot magnitude accepted from the LU factorization.
pub const MIN_PIVOT: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct SystemMatrices {
    mu: f64,
    collocation: DMatrix<f64>,
    d1: DMatrix<f64>,
    d2: DMatrix<f64>,
    w_beta: DMatrix<f64>,
    w_gamma: DMatrix<f64>,
    pi_beta: PIWeightTable,
    pi_gamma: PIWeightTable,
    system: DMatrix<f64>,
    lu: LU<f64, Dyn, Dyn>,
}

impl SystemMatrices {
    /// `μ_τ^α`.
    pub fn mu(&self) -> f64 {
        self.mu
    }
    /// `B`, `(N-1)×(N-1)`.
    pub fn collocation(&self) -> &DMatrix<f64> {
        &self.collocation
    }
    /// `D₁`, `N×(N-1)`.
    pub fn d1(&self) -> &DMatrix<f64> {
        &self.d1
    }
    /// `D₂`, `N×(N-1)`.
    pub fn d2(&self) -> &DMatrix<f64> {
        &self.d2
    }
    /// `ν_β W_β`, `(N-1)×N`.
    pub fn w_beta(&self) -> &DMatrix<f64> {
        &self.w_beta
    }
    /// `ν_γ W_γ`, `(N-1)×N`.
    pub fn w_gamma(&self) -> &DMatrix<f64> {
        &self.w_gamma
    }
    pub fn pi_beta(&self) -> &PIWeightTable {
        &self.pi_beta
    }
    pub fn pi_gamma(&self) -> &PIWeightTable {
        &self.pi_gamma
    }
    /// The assembled matrix `A`.
    pub fn system(&self) -> &DMatrix<f64> {
        &self.system
    }
    pub fn lu(&self) -> &LU<f64, Dyn, Dyn> {
        &self.lu
    }
    pub fn dim(&self) -> usize {
        self.system.nrows()
    }
}

fn scaled_weight_matrix(table: &PIWeightTable) -> DMatrix<f64> {
    let n = table.cells();
    let mut w = DMatrix::zeros(n - 1, n);
    for (r, j, value) in table.entries() {
        w[(r - 1, j)] = table.nu() * value;
    }
    w
}

/// Builds and factorizes the system matrix. `A` carries no time-level
/// dependence, so one factorization serves every step.
pub fn assemble(spec: &ProblemSpec, grid: &Grid) -> Result<SystemMatrices> {
    let n = grid.cells();
    let mu = l1_scale(spec.alpha(), grid.tau());
    let collocation = collocation_matrix(n, &grid.interior_nodes())?;
    let coeffs = deriv_coeffs(n)?;
    let lower_nodes: Vec<f64> = (0..n).map(|r| grid.node(r)).collect();
    let (d1, d2) = derivative_matrices(n, &lower_nodes, &coeffs)?;
    let pi_beta = pi_weights(spec.beta(), n)?;
    let pi_gamma = pi_weights(spec.gamma(), n)?;
    let w_beta = scaled_weight_matrix(&pi_beta);
    let w_gamma = scaled_weight_matrix(&pi_gamma);

    let system =
        &collocation * mu - (&w_beta * &d2) * spec.kappa1() + (&w_gamma * &d1) * spec.kappa2();
    let lu = system.clone().lu();
    let u = lu.u();
    let min_pivot = u
        .diagonal()
        .iter()
        .fold(f64::INFINITY, |m, p| m.min(p.abs()));
    if min_pivot.is_nan() || min_pivot <= MIN_PIVOT {
        return Err(FadeError::Solver(format!(
            "system matrix is singular (smallest pivot {min_pivot:.3e}) for {spec}, N={n}, M={}",
            grid.steps()
        )));
    }
    Ok(SystemMatrices {
        mu,
        collocation,
        d1,
        d2,
        w_beta,
        w_gamma,
        pi_beta,
        pi_gamma,
        system,
        lu,
    })
}

/// Second assembly route: every entry of `A` from the scalar formula
///
/// `A_{r,i} = μ B_i(x_r) − Σ_{j≤r} [ κ₁ ν_β w^β_{j,r} Σ_s d2_{s,i} B_{i+s}(x_j)
///                                  − κ₂ ν_γ w^γ_{j,r} Σ_s d1_{s,i} B_{i+s}(x_j) ]`
///
/// using single-function basis evaluation and no matrix products.
pub fn assemble_entrywise(spec: &ProblemSpec, grid: &Grid) -> Result<DMatrix<f64>> {
    let n = grid.cells();
    let mu = l1_scale(spec.alpha(), grid.tau());
    let coeffs = deriv_coeffs(n)?;
    let pb = pi_weights(spec.beta(), n)?;
    let pg = pi_weights(spec.gamma(), n)?;
    let basis = |i: i64, x: f64| bernstein::eval_basis(n, i, x);
    let mut a = DMatrix::zeros(n - 1, n - 1);
    for r in 1..n {
        let xr = grid.node(r);
        for i in 1..n {
            let ii = i as i64;
            let mut spatial = 0.0;
            for j in 0..=r {
                let xj = grid.node(j);
                let mut second = 0.0;
                for s in -2..=2 {
                    second += coeffs.d2(s, i) * basis(ii + s, xj)?;
                }
                let mut first = 0.0;
                for s in -1..=1 {
                    first += coeffs.d1(s, i) * basis(ii + s, xj)?;
                }
                spatial += spec.kappa1() * pb.nu() * pb.weight(j, r) * second
                    - spec.kappa2() * pg.nu() * pg.weight(j, r) * first;
            }
            a[(r - 1, i - 1)] = mu * basis(ii, xr)? - spatial;
        }
    }
    Ok(a)
}
