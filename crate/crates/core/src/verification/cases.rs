//! Manufactured solutions with analytically constructed forcing.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{FadeError, Result};
use crate::fractional::{
    caputo_exp_decay, caputo_monomial, caputo_oracle, caputo_sin_pi, FracOrder,
};
use crate::gamma::gamma_checked;
use crate::solver::ProblemSpec;

/// Points sampled by the construction-time residual check.
pub const RESIDUAL_SAMPLES: usize = 50;
/// Largest residual `|D_t^α u − κ₁D^β u + κ₂D^γ u − h|` accepted.
pub const RESIDUAL_TOL: f64 = 1e-8;
/// Longest horizon the series evaluators are trusted on.
pub const MAX_HORIZON: f64 = 10.0;
const RESIDUAL_SEED: u64 = 0x5eed_fade;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Example {
    /// `u = x²(1−x)² e^(−t)`.
    Example1,
    /// `u = sin(πx) t²`.
    Example2,
}

impl fmt::Display for Example {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Example::Example1 => "example1",
            Example::Example2 => "example2",
        })
    }
}

impl FromStr for Example {
    type Err = FadeError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "example1" => Ok(Example::Example1),
            "example2" => Ok(Example::Example2),
            other => Err(FadeError::Config(format!(
                "unknown case {other:?} (expected example1 or example2)"
            ))),
        }
    }
}

/// Equation parameters for a manufactured case.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CaseParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub kappa1: f64,
    pub kappa2: f64,
    pub horizon: f64,
}

impl CaseParams {
    /// First experiment: α=0.4, β=1.5, γ=0.5, κ₁=0.001, κ₂=2, T=1.
    pub const fn example1() -> Self {
        Self {
            alpha: 0.4,
            beta: 1.5,
            gamma: 0.5,
            kappa1: 0.001,
            kappa2: 2.0,
            horizon: 1.0,
        }
    }

    /// Second experiment: α=0.5, β=1.5, γ=0.5, κ₁=0.1, κ₂=5, T=1.
    pub const fn example2() -> Self {
        Self {
            alpha: 0.5,
            beta: 1.5,
            gamma: 0.5,
            kappa1: 0.1,
            kappa2: 5.0,
            horizon: 1.0,
        }
    }

    pub fn defaults_for(example: Example) -> Self {
        match example {
            Example::Example1 => Self::example1(),
            Example::Example2 => Self::example2(),
        }
    }

    pub fn orders(&self) -> Result<(FracOrder, FracOrder, FracOrder)> {
        Ok((
            FracOrder::temporal(self.alpha)?,
            FracOrder::dispersive(self.beta)?,
            FracOrder::advective(self.gamma)?,
        ))
    }
}

/// A problem whose exact solution is known in closed form.
#[derive(Debug, Clone)]
pub struct ManufacturedCase {
    example: Example,
    params: CaseParams,
    spec: ProblemSpec,
}

fn quartic(x: f64) -> f64 {
    x * x * (1.0 - x) * (1.0 - x)
}

/// Caputo derivative of `x² − 2x³ + x⁴`.
fn quartic_caputo(eta: FracOrder, x: f64) -> f64 {
    caputo_monomial(2, eta, x) - 2.0 * caputo_monomial(3, eta, x) + caputo_monomial(4, eta, x)
}

impl ManufacturedCase {
    pub fn example(&self) -> Example {
        self.example
    }

    pub fn params(&self) -> &CaseParams {
        &self.params
    }

    pub fn spec(&self) -> &ProblemSpec {
        &self.spec
    }

    pub fn exact(&self, x: f64, t: f64) -> f64 {
        match self.example {
            Example::Example1 => quartic(x) * (-t).exp(),
            Example::Example2 => (PI * x).sin() * t * t,
        }
    }

    /// `∂u/∂t`.
    pub fn exact_dt(&self, x: f64, t: f64) -> f64 {
        match self.example {
            Example::Example1 => -quartic(x) * (-t).exp(),
            Example::Example2 => 2.0 * t * (PI * x).sin(),
        }
    }

    /// `∂u/∂x`.
    pub fn exact_dx(&self, x: f64, t: f64) -> f64 {
        match self.example {
            Example::Example1 => (2.0 * x - 6.0 * x * x + 4.0 * x * x * x) * (-t).exp(),
            Example::Example2 => PI * (PI * x).cos() * t * t,
        }
    }

    /// `∂²u/∂x²`.
    pub fn exact_dxx(&self, x: f64, t: f64) -> f64 {
        match self.example {
            Example::Example1 => (2.0 - 12.0 * x + 12.0 * x * x) * (-t).exp(),
            Example::Example2 => -PI * PI * (PI * x).sin() * t * t,
        }
    }

    /// Residual of the equation at `(x, t)` with every fractional
    /// derivative taken by direct quadrature of the Caputo integral.
    pub fn forcing_residual(&self, x: f64, t: f64) -> Result<f64> {
        let spec = &self.spec;
        let dt = caputo_oracle(|s| self.exact_dt(x, s), spec.alpha(), t)?;
        let dbeta = caputo_oracle(|s| self.exact_dxx(s, t), spec.beta(), x)?;
        let dgamma = caputo_oracle(|s| self.exact_dx(s, t), spec.gamma(), x)?;
        Ok(dt - spec.kappa1() * dbeta + spec.kappa2() * dgamma - spec.forcing(x, t))
    }

    /// Largest residual over the deterministic sample set.
    pub fn max_forcing_residual(&self, samples: usize) -> Result<f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(RESIDUAL_SEED);
        let horizon = self.params.horizon;
        let mut worst = 0.0_f64;
        for _ in 0..samples {
            let x: f64 = rng.gen_range(1e-3..1.0);
            let t: f64 = horizon * rng.gen_range(1e-3..=1.0);
            worst = worst.max(self.forcing_residual(x, t)?.abs());
        }
        Ok(worst)
    }
}

/// Builds the case and checks that its forcing closes the equation.
pub fn build_case(example: Example, params: CaseParams) -> Result<ManufacturedCase> {
    let case = build_case_unchecked(example, params)?;
    let worst = case.max_forcing_residual(RESIDUAL_SAMPLES)?;
    if worst.is_nan() || worst > RESIDUAL_TOL {
        return Err(FadeError::Construction(format!(
            "{example} forcing leaves residual {worst:.3e} > {RESIDUAL_TOL:.0e} for {}",
            case.spec
        )));
    }
    Ok(case)
}

/// Builds the case without the quadrature residual check.
pub fn build_case_unchecked(example: Example, params: CaseParams) -> Result<ManufacturedCase> {
    let (alpha, beta, gamma) = params.orders()?;
    if params.horizon > MAX_HORIZON {
        return Err(FadeError::Config(format!(
            "horizon {} exceeds supported maximum {MAX_HORIZON}",
            params.horizon
        )));
    }
    let (k1, k2) = (params.kappa1, params.kappa2);
    let spec = match example {
        Example::Example1 => ProblemSpec::new(alpha, beta, gamma, k1, k2, params.horizon, quartic)?
            .with_forcing(move |x, t| {
                let decay = (-t).exp();
                let dt = caputo_exp_decay(alpha, t).expect("t within validated horizon");
                quartic(x) * dt - k1 * decay * quartic_caputo(beta, x)
                    + k2 * decay * quartic_caputo(gamma, x)
            }),
        Example::Example2 => {
            let a = alpha.value();
            let time_factor = 2.0 / gamma_checked(3.0 - a);
            ProblemSpec::new(alpha, beta, gamma, k1, k2, params.horizon, |_| 0.0)?.with_forcing(
                move |x, t| {
                    let xc = x.clamp(0.0, 1.0);
                    let sb = caputo_sin_pi(beta, xc).expect("x within [0, 1]");
                    let sg = caputo_sin_pi(gamma, xc).expect("x within [0, 1]");
                    (PI * x).sin() * time_factor * t.powf(2.0 - a) - k1 * t * t * sb
                        + k2 * t * t * sg
                },
            )
        }
    };
    Ok(ManufacturedCase {
        example,
        params,
        spec,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example1_forcing_at_initial_time() {
        let case = build_case_unchecked(Example::Example1, CaseParams::example1()).unwrap();
        let p = case.params;
        let (_, beta, gamma) = p.orders().unwrap();
        let x = 0.3;
        let expected = -p.kappa1 * quartic_caputo(beta, x) + p.kappa2 * quartic_caputo(gamma, x);
        assert!((case.spec.forcing(x, 0.0) - expected).abs() < 1e-15);
    }

    #[test]
    fn example1_dispersive_part_at_right_end() {
        let beta = FracOrder::dispersive(1.5).unwrap();
        assert!((quartic_caputo(beta, 1.0) - 0.451_351_7).abs() < 1e-7);
    }

    #[test]
    fn example2_forcing_vanishes_at_left_end() {
        let case = build_case_unchecked(Example::Example2, CaseParams::example2()).unwrap();
        for t in [0.0, 0.1, 0.5, 1.0] {
            assert_eq!(case.spec.forcing(0.0, t), 0.0);
        }
    }

    #[test]
    fn both_cases_close_their_equations() {
        assert!(build_case(Example::Example1, CaseParams::example1()).is_ok());
        assert!(build_case(Example::Example2, CaseParams::example2()).is_ok());
    }

    #[test]
    fn wrong_forcing_is_caught() {
        let case = build_case_unchecked(Example::Example1, CaseParams::example1()).unwrap();
        let mut broken = case.clone();
        let h = case.spec.clone();
        broken.spec = h.clone().with_forcing(move |x, t| h.forcing(x, t) + 1e-6);
        assert!(broken.max_forcing_residual(5).unwrap() > RESIDUAL_TOL);
    }

    #[test]
    fn parses_case_names() {
        assert_eq!("example2".parse::<Example>().unwrap(), Example::Example2);
        assert!("example3".parse::<Example>().is_err());
    }
}
