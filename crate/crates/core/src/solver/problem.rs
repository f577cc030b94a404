use std::fmt;
use std::sync::Arc;

use crate::error::{FadeError, Result};
use crate::fractional::{FracOrder, OrderKind};

pub type InitialFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;
pub type ForcingFn = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;

/// Tolerance on `g(0)` and `g(1)` for compatibility with the homogeneous
/// boundary conditions.
pub const BOUNDARY_COMPAT_TOL: f64 = 1e-12;

/// The continuous problem
///
/// `D_t^α u = κ₁ D_x^β u − κ₂ D_x^γ u + h(x, t)` on `(0,1)×(0,T]`,
/// `u(x, 0) = g(x)`, `u(0, t) = u(1, t) = 0`.
#[derive(Clone)]
pub struct ProblemSpec {
    alpha: FracOrder,
    beta: FracOrder,
    gamma: FracOrder,
    kappa1: f64,
    kappa2: f64,
    horizon: f64,
    initial: InitialFn,
    forcing: Option<ForcingFn>,
}

impl ProblemSpec {
    pub fn new<G>(
        alpha: FracOrder,
        beta: FracOrder,
        gamma: FracOrder,
        kappa1: f64,
        kappa2: f64,
        horizon: f64,
        initial: G,
    ) -> Result<Self>
    where
        G: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        for (order, kind) in [
            (alpha, OrderKind::Temporal),
            (beta, OrderKind::Dispersive),
            (gamma, OrderKind::Advective),
        ] {
            if order.kind() != kind {
                return Err(FadeError::Config(format!(
                    "expected a {kind:?} order, got {order}"
                )));
            }
        }
        for (name, k) in [("kappa1", kappa1), ("kappa2", kappa2)] {
            if !(k >= 0.0 && k.is_finite()) {
                return Err(FadeError::Config(format!(
                    "{name} must be finite and nonnegative, got {k}"
                )));
            }
        }
        if !(horizon > 0.0 && horizon.is_finite()) {
            return Err(FadeError::Config(format!(
                "horizon T must be positive, got {horizon}"
            )));
        }
        let (g0, g1) = (initial(0.0), initial(1.0));
        if g0.abs() > BOUNDARY_COMPAT_TOL || g1.abs() > BOUNDARY_COMPAT_TOL {
            return Err(FadeError::Config(format!(
                "initial profile must vanish at both ends, got g(0)={g0}, g(1)={g1}"
            )));
        }
        Ok(Self {
            alpha,
            beta,
            gamma,
            kappa1,
            kappa2,
            horizon,
            initial: Arc::new(initial),
            forcing: None,
        })
    }

    pub fn with_forcing<H>(mut self, forcing: H) -> Self
    where
        H: Fn(f64, f64) -> f64 + Send + Sync + 'static,
    {
        self.forcing = Some(Arc::new(forcing));
        self
    }

    pub fn alpha(&self) -> FracOrder {
        self.alpha
    }
    pub fn beta(&self) -> FracOrder {
        self.beta
    }
    pub fn gamma(&self) -> FracOrder {
        self.gamma
    }
    pub fn kappa1(&self) -> f64 {
        self.kappa1
    }
    pub fn kappa2(&self) -> f64 {
        self.kappa2
    }
    pub fn horizon(&self) -> f64 {
        self.horizon
    }

    pub fn initial(&self, x: f64) -> f64 {
        (self.initial)(x)
    }

    /// `h(x, t)`, zero when no forcing was attached.
    pub fn forcing(&self, x: f64, t: f64) -> f64 {
        self.forcing.as_ref().map_or(0.0, |h| h(x, t))
    }

    pub fn has_forcing(&self) -> bool {
        self.forcing.is_some()
    }
}

impl fmt::Debug for ProblemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ProblemSpec")
            .field("alpha", &self.alpha.value())
            .field("beta", &self.beta.value())
            .field("gamma", &self.gamma.value())
            .field("kappa1", &self.kappa1)
            .field("kappa2", &self.kappa2)
            .field("horizon", &self.horizon)
            .field("forcing", &self.forcing.is_some())
            .finish()
    }
}

impl fmt::Display for ProblemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}, {}, {}, kappa1={}, kappa2={}, T={}",
            self.alpha, self.beta, self.gamma, self.kappa1, self.kappa2, self.horizon
        )
    }
}
