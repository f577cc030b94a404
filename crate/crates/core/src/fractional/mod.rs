//! Scalar fractional calculus: orders, L1 weights and Caputo evaluators.

mod caputo;
mod l1;
mod order;

pub use caputo::{
    caputo_exp_decay, caputo_monomial, caputo_oracle, caputo_sin_pi, ORACLE_ABS_TOL,
    SERIES_MAX_TERMS, SERIES_REL_CUTOFF,
};
pub(crate) use l1::from_lags as l1_from_lags;
pub use l1::{l1_lag_weights, l1_scale, l1_weights, L1Weights};
pub use order::{FracOrder, OrderKind};
