//! Caputo derivatives of the function families used by the manufactured
//! solutions, plus a direct quadrature of the defining integral that
//! serves as an independent oracle.

use std::f64::consts::PI;

use crate::error::{FadeError, Result};
use crate::fractional::FracOrder;
use crate::gamma::gamma_checked;
use crate::quadrature;

/// Relative cut-off for the alternating series: stop once a term falls
/// below this fraction of the largest term seen.
pub const SERIES_REL_CUTOFF: f64 = 1e-15;
/// Hard cap on series length.
pub const SERIES_MAX_TERMS: usize = 300;
/// Absolute tolerance requested from the oracle quadrature.
pub const ORACLE_ABS_TOL: f64 = 1e-12;

/// Caputo derivative of `x^p`:
/// zero when `p < ⌈η⌉`, otherwise `Γ(p+1)/Γ(p+1-η) · x^(p-η)`.
pub fn caputo_monomial(p: u32, eta: FracOrder, x: f64) -> f64 {
    let m = eta.ceil();
    if p < m {
        return 0.0;
    }
    monomial_ratio(p, eta) * x.powf(p as f64 - eta.value())
}

/// `Γ(p+1)/Γ(p+1-η)` for `p ≥ m`, built as
/// `m!/Γ(m+1-η) · Π_{k=m+1}^{p} k/(k-η)` so large `p` never overflows.
fn monomial_ratio(p: u32, eta: FracOrder) -> f64 {
    let m = eta.ceil();
    let e = eta.value();
    let m_fact: f64 = (1..=m).map(f64::from).product();
    let mut ratio = m_fact / gamma_checked(m as f64 + 1.0 - e);
    for k in (m + 1)..=p {
        let k = f64::from(k);
        ratio *= k / (k - e);
    }
    ratio
}

/// Sums an alternating series given its first term and the ratio between
/// consecutive terms `ratio(k) = term_{k+1} / term_k`.
fn sum_series<R: Fn(usize) -> f64>(first: f64, ratio: R, what: &str) -> Result<f64> {
    let mut term = first;
    let mut sum = 0.0;
    let mut peak = 0.0_f64;
    for k in 0..SERIES_MAX_TERMS {
        peak = peak.max(term.abs());
        if term.abs() < SERIES_REL_CUTOFF * peak || term == 0.0 {
            return Ok(sum);
        }
        sum += term;
        term *= ratio(k);
    }
    Err(FadeError::Numerical(format!(
        "{what}: series did not converge within {SERIES_MAX_TERMS} terms"
    )))
}

/// `D_t^α e^(-t) = Σ_{k≥1} (-1)^k t^(k-α) / Γ(k+1-α)`.
pub fn caputo_exp_decay(alpha: FracOrder, t: f64) -> Result<f64> {
    if alpha.ceil() != 1 {
        return Err(FadeError::Domain(format!(
            "caputo_exp_decay expects an order in (0,1), got {alpha}"
        )));
    }
    if !t.is_finite() || t < 0.0 {
        return Err(FadeError::Domain(format!(
            "time must be nonnegative, got {t}"
        )));
    }
    if t == 0.0 {
        return Ok(0.0);
    }
    let a = alpha.value();
    let first = -t.powf(1.0 - a) / gamma_checked(2.0 - a);
    // term_k carries t^(k-α)/Γ(k+1-α); series index n = k - 1
    sum_series(first, |n| -t / (n as f64 + 2.0 - a), "caputo_exp_decay")
}

/// Caputo derivative of `sin(πx)`, summed from the sine's power series:
/// `Σ_k (-1)^k π^(2k+1) x^(2k+1-η) / Γ(2k+2-η)` over the terms with
/// `2k+1 ≥ ⌈η⌉`.
pub fn caputo_sin_pi(eta: FracOrder, x: f64) -> Result<f64> {
    if !x.is_finite() || x < 0.0 {
        return Err(FadeError::Domain(format!("x must be nonnegative, got {x}")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let e = eta.value();
    // first surviving power 2k0+1 ≥ m
    let k0 = (eta.ceil() as usize) / 2;
    let p0 = (2 * k0 + 1) as f64;
    let sign = if k0.is_multiple_of(2) { 1.0 } else { -1.0 };
    let first = sign * PI.powf(p0) * x.powf(p0 - e) / gamma_checked(p0 + 1.0 - e);
    let pix2 = (PI * x).powi(2);
    sum_series(
        first,
        |n| {
            let k = (k0 + n) as f64;
            -pix2 / ((2.0 * k + 2.0 - e) * (2.0 * k + 3.0 - e))
        },
        "caputo_sin_pi",
    )
}

/// Evaluates the Caputo integral
/// `1/Γ(m-η) ∫_0^x (x-s)^(m-η-1) f^(m)(s) ds`
/// by adaptive quadrature after the change of variables
/// `u = (x-s)^(m-η)`, which turns the weakly singular kernel into a
/// constant: the integral becomes `1/Γ(m-η+1) ∫_0^{x^(m-η)} f^(m)(x - u^(1/(m-η))) du`.
///
/// `f_m` must be the exact `m`-th derivative of the target function.
pub fn caputo_oracle<F: Fn(f64) -> f64>(f_m: F, eta: FracOrder, x: f64) -> Result<f64> {
    if !x.is_finite() || x < 0.0 {
        return Err(FadeError::Domain(format!("x must be nonnegative, got {x}")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let nu = eta.ceil() as f64 - eta.value();
    let inv_nu = 1.0 / nu;
    let upper = x.powf(nu);
    let integral = quadrature::integrate(
        |u| f_m((x - u.powf(inv_nu)).max(0.0)),
        0.0,
        upper,
        ORACLE_ABS_TOL,
    )?;
    Ok(integral / gamma_checked(nu + 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn beta(v: f64) -> FracOrder {
        FracOrder::dispersive(v).unwrap()
    }
    fn gam(v: f64) -> FracOrder {
        FracOrder::advective(v).unwrap()
    }
    fn alpha(v: f64) -> FracOrder {
        FracOrder::temporal(v).unwrap()
    }

    #[test]
    fn monomial_below_ceiling_vanishes() {
        assert_eq!(caputo_monomial(1, beta(1.5), 0.7), 0.0);
        assert_eq!(caputo_monomial(0, gam(0.5), 0.7), 0.0);
    }

    #[test]
    fn monomial_closed_forms() {
        // Γ(3)/Γ(1.5) = 2/(√π/2)
        let v = caputo_monomial(2, beta(1.5), 1.0);
        assert!((v - 4.0 / PI.sqrt()).abs() < 1e-13);
        assert!((v - 2.256_758_3).abs() < 1e-7);
        // Γ(5)/Γ(4.5) = 24 / (105√π/16)
        let v = caputo_monomial(4, gam(0.5), 1.0);
        assert!((v - 24.0 * 16.0 / (105.0 * PI.sqrt())).abs() < 1e-13);
        assert!((v - 2.063_321_9).abs() < 1e-7);
    }

    #[test]
    fn monomial_large_power_matches_gamma_ratio() {
        let e = beta(1.3);
        let direct = gamma_checked(31.0) / gamma_checked(31.0 - 1.3);
        assert!((caputo_monomial(30, e, 1.0) - direct).abs() / direct < 1e-12);
    }

    #[test]
    fn series_vanish_at_origin() {
        assert_eq!(caputo_exp_decay(alpha(0.3), 0.0).unwrap(), 0.0);
        assert_eq!(caputo_sin_pi(beta(1.5), 0.0).unwrap(), 0.0);
    }

    #[test]
    fn oracle_on_linear_and_quadratic() {
        // f = x: second derivative identically zero
        assert_eq!(caputo_oracle(|_| 0.0, beta(1.5), 0.6).unwrap(), 0.0);
        // f = x^2: f'' = 2
        let v = caputo_oracle(|_| 2.0, beta(1.5), 1.0).unwrap();
        assert!((v - 2.256_758_3).abs() < 1e-7);
    }

    #[test]
    fn oracle_on_quartic_combination() {
        // f = x^4 - 2x^3 + x^2, f'' = 12x^2 - 12x + 2
        let v = caputo_oracle(|s| 12.0 * s * s - 12.0 * s + 2.0, beta(1.5), 1.0).unwrap();
        assert!((v - 0.451_351_7).abs() < 1e-7, "{v}");
    }

    #[test]
    fn exp_decay_rejects_bad_inputs() {
        assert!(caputo_exp_decay(beta(1.5), 0.5).is_err());
        assert!(caputo_exp_decay(alpha(0.5), -0.1).is_err());
    }

    #[test]
    fn exp_decay_converges_on_long_horizon() {
        let v = caputo_exp_decay(alpha(0.5), 10.0).unwrap();
        let oracle = caputo_oracle(|s| -(-s).exp(), alpha(0.5), 10.0).unwrap();
        assert!((v - oracle).abs() < 1e-10);
    }
}
