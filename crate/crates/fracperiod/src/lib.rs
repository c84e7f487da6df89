//! Numerical study of linear Caputo fractional evolution equations
//!
//!   D^α_C u(t) = A u(t) + f(t),   u(0) = x,   0 < α ≤ 1,
//!
//! for diagonal operators A: Mittag-Leffler and Mainardi special functions,
//! fractional calculus operators, the imaginary spectral set Σ_i(A, α), mild
//! solutions by product-integration quadrature, and diagnostics quantifying
//! asymptotic (anti-)periodicity of trajectories.

pub mod asymptotic;
pub mod error;
pub mod forcing;
mod fraccalc;
pub mod gamma;
pub mod grid;
pub mod mainardi;
pub mod mittag_leffler;
pub mod operator;
pub mod order;
pub mod quad;
pub mod solver;

pub use asymptotic::{
    classify_scenario, decay_verdict, forcing_spectrum_check, fourier_diagnostic,
    periodicity_profile, Classification, ClassifyParams, HypothesisFlags, PeriodicityProfile,
    SpectrumTarget, Verdict,
};
pub use error::{FracError, Result};
pub use forcing::{DecayTerm, ForcingSpec, ForcingTerm};
pub use fraccalc::{caputo_derivative, inversion_residual, riemann_liouville_integral};
pub use grid::{SampledFunction, TimeGrid};
pub use mainardi::{mainardi_density, subordination_identity_residual};
pub use mittag_leffler::{
    mittag_leffler, mittag_leffler_in, mittag_leffler_real, EvalDomain, MlParams, Regime,
};
pub use operator::{
    exp_sigma, katznelson_tzafriri_hypothesis, massera_flags, massera_hypothesis, resolvent_alpha,
    sigma_i, DiagonalOperator, MasseraFlags, OperatorKind, PeriodicityVariant, SpectralSet,
    UnitCircleSet,
};
pub use order::FracOrder;
pub use solver::{
    f_alpha_norm_check, f_alpha_response, mild_residual, scalar_resolvent_s, solve, solve_mode,
    Trajectory,
};
