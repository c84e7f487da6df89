use crate::error::{FracError, Result};

/// The fractional order α ∈ (0, 1] of the Caputo evolution equation.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct FracOrder(f64);

impl FracOrder {
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha > 0.0 && alpha <= 1.0 && alpha.is_finite() {
            Ok(Self(alpha))
        } else {
            Err(FracError::InvalidParameter(format!(
                "fractional order must lie in (0, 1], got {alpha}"
            )))
        }
    }

    pub fn get(&self) -> f64 {
        self.0
    }

    pub fn is_classical(&self) -> bool {
        self.0 == 1.0
    }
}

impl std::fmt::Display for FracOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}
