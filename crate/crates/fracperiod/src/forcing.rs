//! Forcing signals f as finite trigonometric sums per mode,
//! f_n(t) = Σ_j c_{n,j} e^{iω_j t} + d_n e^{-γt}, with the declared frequency
//! set {ω_j} standing in for the spectrum sp(f).

use num_complex::Complex64;

use crate::error::{FracError, Result};
use crate::grid::{SampledFunction, TimeGrid};

/// One trigonometric component c e^{iωt}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ForcingTerm {
    pub omega: f64,
    pub amplitude: Complex64,
}

/// Optional decaying remainder d e^{-γt} per mode.
#[derive(Debug, Clone, PartialEq)]
pub struct DecayTerm {
    pub d: Vec<Complex64>,
    pub gamma: f64,
}

/// Forcing for all modes: per-mode trigonometric sums plus an optional
/// exponentially decaying remainder.
#[derive(Debug, Clone, PartialEq)]
pub struct ForcingSpec {
    modes: Vec<Vec<ForcingTerm>>,
    decay: Option<DecayTerm>,
}

impl ForcingSpec {
    pub fn new(modes: Vec<Vec<ForcingTerm>>, decay: Option<DecayTerm>) -> Result<Self> {
        if modes.is_empty() {
            return Err(FracError::DimensionMismatch(
                "forcing needs at least one mode".into(),
            ));
        }
        if let Some(dec) = &decay {
            if !(dec.gamma > 0.0) {
                return Err(FracError::InvalidParameter(format!(
                    "decay rate gamma must be positive, got {}",
                    dec.gamma
                )));
            }
            if dec.d.len() != modes.len() {
                return Err(FracError::DimensionMismatch(format!(
                    "decay vector has {} entries for {} modes",
                    dec.d.len(),
                    modes.len()
                )));
            }
        }
        Ok(Self { modes, decay })
    }

    /// Zero forcing on `n_modes` modes.
    pub fn zero(n_modes: usize) -> Result<Self> {
        Self::new(vec![Vec::new(); n_modes], None)
    }

    /// cos(ωt) in every mode: amplitudes 1/2 at ±ω.
    pub fn cosine(n_modes: usize, omega: f64) -> Result<Self> {
        let half = Complex64::new(0.5, 0.0);
        let terms = vec![
            ForcingTerm {
                omega,
                amplitude: half,
            },
            ForcingTerm {
                omega: -omega,
                amplitude: half,
            },
        ];
        Self::new(vec![terms; n_modes], None)
    }

    pub fn with_decay(mut self, d: Vec<Complex64>, gamma: f64) -> Result<Self> {
        if !(gamma > 0.0) {
            return Err(FracError::InvalidParameter(format!(
                "decay rate gamma must be positive, got {gamma}"
            )));
        }
        if d.len() != self.modes.len() {
            return Err(FracError::DimensionMismatch(
                "decay vector length must match mode count".into(),
            ));
        }
        self.decay = Some(DecayTerm { d, gamma });
        Ok(self)
    }

    pub fn n_modes(&self) -> usize {
        self.modes.len()
    }

    pub fn terms(&self, mode: usize) -> &[ForcingTerm] {
        &self.modes[mode]
    }

    pub fn decay(&self) -> Option<&DecayTerm> {
        self.decay.as_ref()
    }

    /// The declared frequency set (union of all ω_j, deduplicated within
    /// 1e-12, ascending). Stands in for sp(f); the decay term contributes
    /// nothing, matching its role as a vanishing remainder.
    pub fn declared_spectrum(&self) -> Vec<f64> {
        let mut freqs: Vec<f64> = Vec::new();
        for terms in &self.modes {
            for t in terms {
                if !freqs.iter().any(|w| (w - t.omega).abs() <= 1e-12) {
                    freqs.push(t.omega);
                }
            }
        }
        freqs.sort_by(f64::total_cmp);
        freqs
    }

    pub fn value(&self, mode: usize, t: f64) -> Complex64 {
        let mut v = Complex64::new(0.0, 0.0);
        for term in &self.modes[mode] {
            v += term.amplitude * Complex64::new(0.0, term.omega * t).exp();
        }
        if let Some(dec) = &self.decay {
            v += dec.d[mode] * (-dec.gamma * t).exp();
        }
        v
    }

    /// Sample all modes onto a grid.
    pub fn sample(&self, grid: TimeGrid) -> SampledFunction {
        let values = grid
            .times()
            .map(|t| (0..self.n_modes()).map(|m| self.value(m, t)).collect())
            .collect();
        SampledFunction { grid, values }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn cosine_is_real() {
        let f = ForcingSpec::cosine(2, 2.0 * PI).unwrap();
        for t in [0.0, 0.1, 0.37, 1.0] {
            let v = f.value(0, t);
            assert!((v.re - (2.0 * PI * t).cos()).abs() < 1e-14);
            assert!(v.im.abs() < 1e-14);
        }
        assert_eq!(f.declared_spectrum(), vec![-2.0 * PI, 2.0 * PI]);
    }

    #[test]
    fn decay_term_adds() {
        let f = ForcingSpec::cosine(1, 2.0 * PI)
            .unwrap()
            .with_decay(vec![Complex64::new(1.0, 0.0)], 1.0)
            .unwrap();
        let v = f.value(0, 2.0);
        let expect = (4.0 * PI).cos() + (-2.0f64).exp();
        assert!((v.re - expect).abs() < 1e-14);
    }

    #[test]
    fn spectrum_deduplicates_across_modes() {
        let term = |w: f64| ForcingTerm {
            omega: w,
            amplitude: Complex64::new(1.0, 0.0),
        };
        let f = ForcingSpec::new(
            vec![vec![term(2.0 * PI)], vec![term(2.0 * PI), term(0.0)]],
            None,
        )
        .unwrap();
        assert_eq!(f.declared_spectrum(), vec![0.0, 2.0 * PI]);
    }

    #[test]
    fn invariants() {
        assert!(ForcingSpec::new(vec![], None).is_err());
        assert!(ForcingSpec::cosine(1, PI)
            .unwrap()
            .with_decay(vec![Complex64::new(1.0, 0.0)], 0.0)
            .is_err());
        assert!(ForcingSpec::cosine(2, PI)
            .unwrap()
            .with_decay(vec![Complex64::new(1.0, 0.0)], 1.0)
            .is_err());
    }

    #[test]
    fn sampling_matches_pointwise() {
        let f = ForcingSpec::cosine(3, PI).unwrap();
        let grid = TimeGrid::new(0.25, 8).unwrap();
        let s = f.sample(grid);
        assert_eq!(s.dim(), 3);
        for (k, t) in grid.times().enumerate() {
            for m in 0..3 {
                assert_eq!(s.values[k][m], f.value(m, t));
            }
        }
    }
}
