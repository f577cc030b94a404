//! L1 discretization of the temporal Caputo derivative.

use crate::error::{FadeError, Result};
use crate::fractional::{FracOrder, OrderKind};
use crate::gamma::gamma_checked;

/// Weights of the L1 operator at time level `k`:
///
/// `L u(t_{k+1}) = mu * sum_{j=0}^{k} a[j] * (u_{j+1} - u_j)`
///
/// with `a[j] = (k+1-j)^(1-α) - (k-j)^(1-α)` and `mu = 1 / (τ^α Γ(2-α))`.
#[derive(Debug, Clone, PartialEq)]
pub struct L1Weights {
    alpha: FracOrder,
    level: usize,
    a: Vec<f64>,
    mu: f64,
}

impl L1Weights {
    pub fn alpha(&self) -> FracOrder {
        self.alpha
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// `a_{k,j}` for `j = 0..=k`.
    pub fn a(&self) -> &[f64] {
        &self.a
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }
}

/// `μ_τ^α = 1 / (τ^α Γ(2-α))`.
pub fn l1_scale(alpha: FracOrder, tau: f64) -> f64 {
    let a = alpha.value();
    1.0 / (tau.powf(a) * gamma_checked(2.0 - a))
}

/// Lag sequence `b_n = (n+1)^(1-α) - n^(1-α)` for `n = 0..len`.
/// Since `a_{k,j} = b_{k-j}`, one table serves every time level.
pub fn l1_lag_weights(alpha: FracOrder, len: usize) -> Vec<f64> {
    let e = 1.0 - alpha.value();
    (0..len)
        .map(|n| {
            let n = n as f64;
            (n + 1.0).powf(e) - n.powf(e)
        })
        .collect()
}

pub fn l1_weights(alpha: FracOrder, k: usize, tau: f64) -> Result<L1Weights> {
    if alpha.kind() != OrderKind::Temporal {
        return Err(FadeError::Domain(format!(
            "L1 weights need a temporal order, got {alpha}"
        )));
    }
    if !(tau > 0.0 && tau.is_finite()) {
        return Err(FadeError::Config(format!(
            "time step must be positive, got {tau}"
        )));
    }
    let lags = l1_lag_weights(alpha, k + 1);
    let a = (0..=k).map(|j| lags[k - j]).collect();
    Ok(L1Weights {
        alpha,
        level: k,
        a,
        mu: l1_scale(alpha, tau),
    })
}

pub(crate) fn from_lags(alpha: FracOrder, k: usize, lags: &[f64], mu: f64) -> L1Weights {
    L1Weights {
        alpha,
        level: k,
        a: (0..=k).map(|j| lags[k - j]).collect(),
        mu,
    }
}
