//! Uniform time grids and sampled vector-valued functions.

use num_complex::Complex64;

use crate::error::{FracError, Result};

/// Uniform grid t_k = k*dt, k = 0..=n_steps (t0 is always 0 here).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    dt: f64,
    n_steps: usize,
}

impl TimeGrid {
    pub fn new(dt: f64, n_steps: usize) -> Result<Self> {
        if !(dt > 0.0) || !dt.is_finite() {
            return Err(FracError::InvalidParameter(format!(
                "dt must be positive, got {dt}"
            )));
        }
        if n_steps < 1 {
            return Err(FracError::InvalidParameter(
                "n_steps must be at least 1".into(),
            ));
        }
        Ok(Self { dt, n_steps })
    }

    /// Grid covering [0, t_max] with the given step; t_max is rounded to a
    /// whole number of steps.
    pub fn from_t_max(dt: f64, t_max: f64) -> Result<Self> {
        if !(t_max > 0.0) {
            return Err(FracError::InvalidParameter(
                "t_max must be positive".into(),
            ));
        }
        Self::new(dt, (t_max / dt).round() as usize)
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn n_steps(&self) -> usize {
        self.n_steps
    }

    /// Number of sample points (n_steps + 1).
    pub fn len(&self) -> usize {
        self.n_steps + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn t(&self, k: usize) -> f64 {
        k as f64 * self.dt
    }

    pub fn t_max(&self) -> f64 {
        self.t(self.n_steps)
    }

    pub fn times(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len()).map(|k| self.t(k))
    }

    /// Steps per unit time, if 1/dt is an integer (required by the
    /// periodicity diagnostics so that t+1 lands on the grid).
    pub fn steps_per_unit(&self) -> Result<usize> {
        let inv = 1.0 / self.dt;
        let r = inv.round();
        if (inv - r).abs() > 1e-12 * inv.max(1.0) {
            return Err(FracError::OffGridShift { inv_dt: inv });
        }
        Ok(r as usize)
    }
}

/// A vector-valued function sampled on a `TimeGrid`: values[k] is the state
/// at t_k, one complex coefficient per mode.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    pub grid: TimeGrid,
    pub values: Vec<Vec<Complex64>>,
}

impl SampledFunction {
    pub fn new(grid: TimeGrid, values: Vec<Vec<Complex64>>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(FracError::DimensionMismatch(format!(
                "expected {} samples, got {}",
                grid.len(),
                values.len()
            )));
        }
        let dim = values.first().map(Vec::len).unwrap_or(0);
        if dim == 0 || values.iter().any(|v| v.len() != dim) {
            return Err(FracError::DimensionMismatch(
                "all samples must share one nonzero dimension".into(),
            ));
        }
        Ok(Self { grid, values })
    }

    /// Sample a scalar closure onto the grid as a 1-mode function.
    pub fn from_scalar_fn<F: FnMut(f64) -> Complex64>(grid: TimeGrid, mut f: F) -> Self {
        let values = grid
            .times()
            .map(|t| vec![f(t)])
            .collect();
        Self { grid, values }
    }

    pub fn dim(&self) -> usize {
        self.values[0].len()
    }

    /// The samples of one mode as a contiguous vector.
    pub fn mode(&self, m: usize) -> Vec<Complex64> {
        self.values.iter().map(|v| v[m]).collect()
    }

    /// Build from per-mode sample arrays (transposed layout).
    pub fn from_modes(grid: TimeGrid, modes: &[Vec<Complex64>]) -> Result<Self> {
        if modes.is_empty() {
            return Err(FracError::DimensionMismatch("no modes".into()));
        }
        if modes.iter().any(|m| m.len() != grid.len()) {
            return Err(FracError::DimensionMismatch(
                "mode length does not match grid".into(),
            ));
        }
        let values = (0..grid.len())
            .map(|k| modes.iter().map(|m| m[k]).collect())
            .collect();
        Ok(Self { grid, values })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_basics() {
        let g = TimeGrid::new(0.5, 4).unwrap();
        assert_eq!(g.len(), 5);
        assert_eq!(g.t(3), 1.5);
        assert_eq!(g.t_max(), 2.0);
        assert!(TimeGrid::new(0.0, 4).is_err());
        assert!(TimeGrid::new(0.1, 0).is_err());
    }

    #[test]
    fn steps_per_unit() {
        assert_eq!(TimeGrid::new(1e-3, 10).unwrap().steps_per_unit().unwrap(), 1000);
        assert_eq!(TimeGrid::new(0.25, 10).unwrap().steps_per_unit().unwrap(), 4);
        assert!(TimeGrid::new(0.3, 10).unwrap().steps_per_unit().is_err());
    }

    #[test]
    fn sampled_function_shape_checks() {
        let g = TimeGrid::new(0.5, 2).unwrap();
        let ok = SampledFunction::new(g, vec![vec![Complex64::new(1.0, 0.0)]; 3]);
        assert!(ok.is_ok());
        let wrong_len = SampledFunction::new(g, vec![vec![Complex64::new(1.0, 0.0)]; 2]);
        assert!(wrong_len.is_err());
    }

    #[test]
    fn mode_round_trip() {
        let g = TimeGrid::new(1.0, 2).unwrap();
        let modes = vec![
            vec![Complex64::new(1.0, 0.0); 3],
            vec![Complex64::new(0.0, 2.0); 3],
        ];
        let f = SampledFunction::from_modes(g, &modes).unwrap();
        assert_eq!(f.dim(), 2);
        assert_eq!(f.mode(1), modes[1]);
    }
}
