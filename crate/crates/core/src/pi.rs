//! Product-integration weights for the spatial Caputo operators.
//!
//! On the uniform grid `x_j = j h`, the Caputo derivative of order `η`
//! at node `x_r` is approximated by interpolating `u^(m)` piecewise
//! linearly and integrating the kernel `(x_r - s)^(m-η-1)` exactly:
//!
//! `D^η u(x_r) ≈ ν · Σ_{j=0}^{r} w_{j,r} u^(m)(x_j)`, `ν = h^(m-η) / Γ(m-η)`.

use crate::error::{FadeError, Result};
use crate::fractional::FracOrder;
use crate::gamma::gamma_checked;

/// `c_j^e = ((j-1)^e - j^e) / e`, negative for `e > 0`.
pub fn c_coeff(j: usize, exponent: f64) -> f64 {
    debug_assert!(j >= 1);
    let j = j as f64;
    ((j - 1.0).powf(exponent) - j.powf(exponent)) / exponent
}

/// Lower-triangular table `w_{j,r}` for rows `1 ≤ r ≤ N-1`, columns `0 ≤ j ≤ r`.
#[derive(Debug, Clone, PartialEq)]
pub struct PIWeightTable {
    eta: FracOrder,
    cells: usize,
    nu: f64,
    rows: Vec<Vec<f64>>,
}

impl PIWeightTable {
    pub fn eta(&self) -> FracOrder {
        self.eta
    }

    /// Number of spatial cells `N`.
    pub fn cells(&self) -> usize {
        self.cells
    }

    /// Scale `ν_h^η`.
    pub fn nu(&self) -> f64 {
        self.nu
    }

    /// Weights `w_{0,r} .. w_{r,r}`.
    pub fn row(&self, r: usize) -> &[f64] {
        assert!(
            (1..self.cells).contains(&r),
            "row {r} outside 1..{}",
            self.cells
        );
        &self.rows[r - 1]
    }

    pub fn weight(&self, j: usize, r: usize) -> f64 {
        self.row(r).get(j).copied().unwrap_or(0.0)
    }

    /// Iterates `(r, j, w_{j,r})` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, &w)| (i + 1, j, w)))
    }

    /// `Σ_j w_{j,r}` must equal `r^(m-η)/(m-η)`, the exact kernel integral
    /// against a constant.
    pub fn expected_row_sum(&self, r: usize) -> f64 {
        let e = kernel_exponent(self.eta);
        (r as f64).powf(e) / e
    }
}

fn kernel_exponent(eta: FracOrder) -> f64 {
    eta.ceil() as f64 - eta.value()
}

/// Builds the weight table for `N` cells.
pub fn pi_weights(eta: FracOrder, cells: usize) -> Result<PIWeightTable> {
    if cells < 2 {
        return Err(FadeError::Config(format!(
            "product-integration table needs at least 2 cells, got {cells}"
        )));
    }
    let low = kernel_exponent(eta);
    let high = low + 1.0;
    // Each cell contributes to its two endpoint values; with q = r - j the
    // distance (in cells) from the left endpoint to x_r:
    //   left  endpoint: -(c_q^high - (q-1) c_q^low)
    //   right endpoint:   c_q^high -  q    c_q^low
    let c_low: Vec<f64> = (0..cells)
        .map(|q| if q == 0 { 0.0 } else { c_coeff(q, low) })
        .collect();
    let c_high: Vec<f64> = (0..cells)
        .map(|q| if q == 0 { 0.0 } else { c_coeff(q, high) })
        .collect();
    let left = |q: usize| -(c_high[q] - (q as f64 - 1.0) * c_low[q]);
    let right = |q: usize| c_high[q] - q as f64 * c_low[q];

    let rows = (1..cells)
        .map(|r| {
            let mut row = vec![0.0; r + 1];
            row[0] = left(r);
            for (j, w) in row.iter_mut().enumerate().take(r).skip(1) {
                *w = right(r - j + 1) + left(r - j);
            }
            row[r] = right(1);
            row
        })
        .collect();

    let h = 1.0 / cells as f64;
    Ok(PIWeightTable {
        eta,
        cells,
        nu: h.powf(low) / gamma_checked(low),
        rows,
    })
}

/// `ν · Σ_{j=0}^{r} w_{j,r} values[j]`, where `values[j]` samples `u^(m)`
/// at `x_j`.
pub fn apply_pi(table: &PIWeightTable, values: &[f64], r: usize) -> Result<f64> {
    if r == 0 || r >= table.cells {
        return Err(FadeError::Contract(format!(
            "row {r} outside 1..{}",
            table.cells
        )));
    }
    if values.len() < r + 1 {
        return Err(FadeError::Contract(format!(
            "row {r} needs {} node values, got {}",
            r + 1,
            values.len()
        )));
    }
    let s: f64 = table.row(r).iter().zip(values).map(|(w, v)| w * v).sum();
    Ok(table.nu * s)
}
