//! The Mainardi/Wright probability density Φ_α on (0, ∞), the subordination
//! kernel linking a semigroup to its fractional resolvent families, plus a
//! numerical check of its two Laplace-transform identities
//!
//!   ∫ Φ_α(θ) e^{-zθ} dθ = E_{α,1}(-z),
//!   ∫ αθ Φ_α(θ) e^{-zθ} dθ = E_{α,α}(-z).
//!
//! Series form:  Φ_α(θ) = Σ_{n≥0} (-θ)^n / (n! Γ(-αn + 1 - α)), the classical
//! Mainardi series; the Laplace identities above pin it down and are enforced
//! by test, not assumed.
//!
//! The alternating series cancels catastrophically once the saddle point
//! σ* = (αθ)^{1/(1-α)} of the integral representation
//!
//!   Φ_α(θ) = (1/2πi) ∫_Ha e^{σ - θ σ^α} σ^{α-1} dσ
//!
//! moves away from the origin, so for σ* >= 1 the density is evaluated by
//! steepest-descent quadrature on a parabola through the saddle, with the
//! exponentially small factor e^{-S} split off analytically so the quadrature
//! works at relative accuracy.

use num_complex::Complex64;

use crate::error::{FracError, Result};
use crate::gamma::rgamma;
use crate::mittag_leffler::{mittag_leffler_real, MlParams};
use crate::quad::composite_gauss_legendre;

/// Default truncation of the Laplace-identity quadrature; the integrand tail
/// beyond is below 1e-10 for every alpha in scope.
pub const THETA_MAX: f64 = 40.0;

/// Φ_α(θ) for 0 < α < 1, θ >= 0.
pub fn mainardi_density(alpha: f64, theta: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(FracError::Domain(format!(
            "mainardi_density requires 0 < alpha < 1, got {alpha}"
        )));
    }
    if !(theta >= 0.0) {
        return Err(FracError::Domain(format!(
            "mainardi_density requires theta >= 0, got {theta}"
        )));
    }
    if theta == 0.0 {
        return Ok(rgamma(1.0 - alpha));
    }
    let saddle = (alpha * theta).powf(1.0 / (1.0 - alpha));
    if saddle < 1.0 {
        Ok(series(alpha, theta).max(0.0))
    } else {
        Ok(saddle_contour(alpha, theta, saddle).max(0.0))
    }
}

/// Max deviation of the two Laplace identities under composite quadrature
/// on [0, THETA_MAX] with `quad_n` total nodes.
pub fn subordination_identity_residual(alpha: f64, z: f64, quad_n: usize) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(FracError::Domain(format!(
            "requires 0 < alpha < 1, got {alpha}"
        )));
    }
    if !(z >= 0.0) {
        return Err(FracError::Domain("requires z >= 0".into()));
    }
    let lhs1 = composite_gauss_legendre(
        |t| mainardi_density(alpha, t).unwrap_or(0.0) * (-z * t).exp(),
        0.0,
        THETA_MAX,
        quad_n,
    );
    let lhs2 = composite_gauss_legendre(
        |t| alpha * t * mainardi_density(alpha, t).unwrap_or(0.0) * (-z * t).exp(),
        0.0,
        THETA_MAX,
        quad_n,
    );
    let rhs1 = mittag_leffler_real(MlParams::new(alpha, 1.0)?, -z)?;
    let rhs2 = mittag_leffler_real(MlParams::new(alpha, alpha)?, -z)?;
    Ok((lhs1 - rhs1).abs().max((lhs2 - rhs2).abs()))
}

fn series(alpha: f64, theta: f64) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    let mut pow = 1.0f64; // (-theta)^n / n!
    let mut quiet = 0u32; // the sin factor in 1/Gamma can silence single terms
    for n in 0..500 {
        let term = pow * rgamma(-alpha * n as f64 + 1.0 - alpha);
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if n > 10 && term.abs() < 1e-17 * sum.abs().max(1e-300) {
            quiet += 1;
            if quiet >= 8 {
                break;
            }
        } else {
            quiet = 0;
        }
        pow *= -theta / (n as f64 + 1.0);
    }
    sum
}

/// Steepest-descent evaluation on the parabola σ(u) = σ*(1+iu)^2 through the
/// saddle σ* = (αθ)^{1/(1-α)}; the factor e^{-S}, S = σ*(1-α)/α, is split off
/// so the trapezoid sums O(1) quantities.
fn saddle_contour(alpha: f64, theta: f64, saddle: f64) -> f64 {
    let s_exp = saddle * (1.0 - alpha) / alpha;
    if s_exp > 700.0 {
        // below the f64 underflow threshold
        return 0.0;
    }
    // scaled exponent w(u) = sigma - theta sigma^alpha + S; Re w(0) = 0
    let w = |u: f64| -> Complex64 {
        let sigma = Complex64::new(saddle * (1.0 - u * u), 2.0 * saddle * u);
        sigma - theta * sigma.powf(alpha) + s_exp
    };
    // march outward until the scaled integrand is negligible
    let mut u_end = 1.0 / saddle.sqrt();
    while w(u_end).re > -45.0 && u_end < 1e4 {
        u_end *= 1.5;
    }
    const N: usize = 1200;
    let h = u_end / N as f64;
    let mut acc = 0.0f64;
    for k in 0..=N {
        let u = k as f64 * h;
        let sigma = Complex64::new(saddle * (1.0 - u * u), 2.0 * saddle * u);
        let dsigma = Complex64::new(-2.0 * saddle * u, 2.0 * saddle);
        let g = w(u).exp() * sigma.powf(alpha - 1.0) * dsigma;
        acc += if k == 0 { 0.5 * g.im } else { g.im };
    }
    (-s_exp).exp() * acc * h / std::f64::consts::PI
}
