use std::fmt;

use crate::error::{FadeError, Result};

/// Role of a fractional order in the advection-dispersion equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Time derivative, order in (0, 1).
    Temporal,
    /// Anomalous dispersion, order in (1, 2).
    Dispersive,
    /// Anomalous advection, order in (0, 1).
    Advective,
}

impl OrderKind {
    fn bounds(self) -> (f64, f64) {
        match self {
            OrderKind::Temporal | OrderKind::Advective => (0.0, 1.0),
            OrderKind::Dispersive => (1.0, 2.0),
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            OrderKind::Temporal => "alpha",
            OrderKind::Dispersive => "beta",
            OrderKind::Advective => "gamma",
        }
    }
}

/// A validated non-integer derivative order tagged with its role.
///
/// The open interval for each kind excludes the integers, so the integer
/// ceiling `m` used by the Caputo definition follows from the kind alone.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FracOrder {
    value: f64,
    kind: OrderKind,
}

impl FracOrder {
    pub fn new(value: f64, kind: OrderKind) -> Result<Self> {
        let (lo, hi) = kind.bounds();
        if !(value > lo && value < hi) {
            return Err(FadeError::Domain(format!(
                "{} must lie in ({lo}, {hi}), got {value}",
                kind.symbol()
            )));
        }
        Ok(Self { value, kind })
    }

    pub fn temporal(value: f64) -> Result<Self> {
        Self::new(value, OrderKind::Temporal)
    }

    pub fn dispersive(value: f64) -> Result<Self> {
        Self::new(value, OrderKind::Dispersive)
    }

    pub fn advective(value: f64) -> Result<Self> {
        Self::new(value, OrderKind::Advective)
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.value
    }

    #[inline]
    pub fn kind(self) -> OrderKind {
        self.kind
    }

    /// `m = ⌈order⌉`, the number of classical derivatives under the
    /// Caputo integral.
    #[inline]
    pub fn ceil(self) -> u32 {
        match self.kind {
            OrderKind::Temporal | OrderKind::Advective => 1,
            OrderKind::Dispersive => 2,
        }
    }
}

impl fmt::Display for FracOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}={}", self.kind.symbol(), self.value)
    }
}
