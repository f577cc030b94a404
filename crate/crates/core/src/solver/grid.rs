use crate::error::{FadeError, Result};

/// Uniform space-time grid: `x_r = r/N`, `t_k = k T/M`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    cells: usize,
    steps: usize,
    horizon: f64,
}

impl Grid {
    pub fn new(cells: usize, steps: usize, horizon: f64) -> Result<Self> {
        if cells < 2 {
            return Err(FadeError::Config(format!(
                "N must be at least 2, got {cells}"
            )));
        }
        if steps < 1 {
            return Err(FadeError::Config(format!(
                "M must be at least 1, got {steps}"
            )));
        }
        if !(horizon > 0.0 && horizon.is_finite()) {
            return Err(FadeError::Config(format!(
                "horizon T must be positive, got {horizon}"
            )));
        }
        Ok(Self {
            cells,
            steps,
            horizon,
        })
    }

    /// Spatial cells `N` (also the Bernstein degree).
    pub fn cells(&self) -> usize {
        self.cells
    }

    /// Time steps `M`.
    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn horizon(&self) -> f64 {
        self.horizon
    }

    pub fn h(&self) -> f64 {
        1.0 / self.cells as f64
    }

    pub fn tau(&self) -> f64 {
        self.horizon / self.steps as f64
    }

    pub fn node(&self, r: usize) -> f64 {
        r as f64 / self.cells as f64
    }

    /// `t_k`; the last level is exactly `T`.
    pub fn time(&self, k: usize) -> f64 {
        if k == self.steps {
            self.horizon
        } else {
            k as f64 * self.tau()
        }
    }

    /// `x_0 .. x_N`.
    pub fn nodes(&self) -> Vec<f64> {
        (0..=self.cells).map(|r| self.node(r)).collect()
    }

    /// `x_1 .. x_{N-1}`.
    pub fn interior_nodes(&self) -> Vec<f64> {
        (1..self.cells).map(|r| self.node(r)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_quantities() {
        let g = Grid::new(8, 20, 1.0).unwrap();
        assert_eq!(g.h(), 0.125);
        assert_eq!(g.tau(), 0.05);
        assert_eq!(g.time(20), 1.0);
        assert_eq!(g.nodes().len(), 9);
        assert_eq!(
            g.interior_nodes(),
            vec![0.125, 0.25, 0.375, 0.5, 0.625, 0.75, 0.875]
        );
        assert!(g.nodes().windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn rejects_degenerate_grids() {
        assert!(Grid::new(1, 10, 1.0).is_err());
        assert!(Grid::new(4, 0, 1.0).is_err());
        assert!(Grid::new(4, 10, -1.0).is_err());
    }
}
