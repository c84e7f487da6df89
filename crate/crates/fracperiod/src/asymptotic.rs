//! Quantified asymptotic (anti-)periodicity of trajectories, and the
//! end-to-end verdict combining the spectral hypotheses with the numerical
//! decay evidence.
//!
//! A signal g is asymptotic Bloch 1-periodic of type p when
//! g(t+1) - e^{ip} g(t) → 0; the profile below records
//! d(T) = max_{t ∈ [T,T+1]} ‖u(t+1) - e^{ip} u(t)‖ over a list of windows T,
//! and `decay_verdict` is the finite-horizon proxy for the limit.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{FracError, Result};
use crate::forcing::ForcingSpec;
use crate::operator::{
    katznelson_tzafriri_hypothesis, massera_flags, sigma_i, DiagonalOperator, MasseraFlags,
    PeriodicityVariant, SpectralSet,
};
use crate::order::FracOrder;
use crate::solver::{solve, Trajectory};

const FREQ_TOL: f64 = 1e-9;

/// d(T) residuals of the Bloch periodicity test over a list of windows.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicityProfile {
    pub windows: Vec<f64>,
    pub residuals: Vec<f64>,
    pub bloch_p: f64,
}

/// Verdict of the classification pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    AllAsymptotic1Periodic,
    AllAsymptoticAnti1Periodic,
    MasseraExistence,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::AllAsymptotic1Periodic => "AllAsymptotic1Periodic",
            Verdict::AllAsymptoticAnti1Periodic => "AllAsymptoticAnti1Periodic",
            Verdict::MasseraExistence => "MasseraExistence",
            Verdict::Inconclusive => "Inconclusive",
        }
    }
}

/// The spectral hypotheses evaluated for a scenario.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HypothesisFlags {
    pub kt_periodic: bool,
    pub kt_anti_periodic: bool,
    pub massera: MasseraFlags,
}

/// Verdict, the profile it rests on, and all hypothesis flags.
#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub verdict: Verdict,
    pub evidence: PeriodicityProfile,
    pub hypothesis_flags: HypothesisFlags,
    pub sigma: SpectralSet,
}

/// Tunables of `classify_scenario`.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassifyParams {
    pub windows: Vec<f64>,
    pub ratio: f64,
    pub floor: f64,
    pub include_conjugates: bool,
    pub bloch_p: f64,
    pub threads: usize,
}

impl Default for ClassifyParams {
    fn default() -> Self {
        Self {
            windows: vec![2.0, 6.0, 10.0],
            ratio: 0.5,
            floor: 1e-6,
            include_conjugates: false,
            bloch_p: 0.0,
            threads: 0,
        }
    }
}

/// Target lattice for `forcing_spectrum_check`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumTarget {
    /// 2πZ (1-periodic)
    TwoPiZ,
    /// (2Z+1)π (anti 1-periodic)
    OddPiZ,
}

fn grid_index(t: f64, steps_per_unit: usize, dt: f64) -> Result<usize> {
    let k = t / dt;
    let r = k.round();
    if (k - r).abs() > 1e-9 * steps_per_unit as f64 {
        return Err(FracError::InvalidParameter(format!(
            "window T = {t} is not on the grid"
        )));
    }
    Ok(r as usize)
}

/// d(T) over the given windows; exact maxima over on-grid points, no
/// interpolation. Requires 1/dt integer so t+1 lands on the grid.
pub fn periodicity_profile(
    traj: &Trajectory,
    bloch_p: f64,
    windows: &[f64],
) -> Result<PeriodicityProfile> {
    let spu = traj.grid.steps_per_unit()?;
    if windows.is_empty() || windows.windows(2).any(|w| w[1] <= w[0]) {
        return Err(FracError::InvalidParameter(
            "windows must be nonempty and strictly increasing".into(),
        ));
    }
    let phase = Complex64::new(0.0, bloch_p).exp();
    let mut residuals = Vec::with_capacity(windows.len());
    for &t0 in windows {
        if !(t0 >= 0.0) || t0 + 2.0 > traj.grid.t_max() + 1e-12 {
            return Err(FracError::InvalidParameter(format!(
                "window [{t0}, {t0}+2] exceeds the grid horizon {}",
                traj.grid.t_max()
            )));
        }
        let k0 = grid_index(t0, spu, traj.grid.dt())?;
        let mut worst = 0.0f64;
        for k in k0..=k0 + spu {
            let mut acc = 0.0;
            for m in &traj.modes {
                acc += (m[k + spu] - phase * m[k]).norm_sqr();
            }
            worst = worst.max(acc.sqrt());
        }
        residuals.push(worst);
    }
    Ok(PeriodicityProfile {
        windows: windows.to_vec(),
        residuals,
        bloch_p,
    })
}

/// True iff the final residual is below `floor`, or the residuals are
/// nonincreasing with d(T_last) <= ratio·d(T_first). Needs >= 3 windows.
pub fn decay_verdict(profile: &PeriodicityProfile, ratio: f64, floor: f64) -> Result<bool> {
    if profile.windows.len() < 3 {
        return Err(FracError::InvalidParameter(
            "decay_verdict needs at least 3 windows".into(),
        ));
    }
    if !(ratio > 0.0 && ratio < 1.0) || !(floor > 0.0) {
        return Err(FracError::InvalidParameter(
            "ratio must lie in (0,1) and floor be positive".into(),
        ));
    }
    let r = &profile.residuals;
    let last = *r.last().unwrap();
    if last <= floor {
        return Ok(true);
    }
    let nonincreasing = r.windows(2).all(|w| w[1] <= w[0]);
    Ok(nonincreasing && last <= ratio * r[0])
}

/// Membership of every declared forcing frequency in the target lattice,
/// tolerance 1e-9.
pub fn forcing_spectrum_check(forcing: &ForcingSpec, target: SpectrumTarget) -> bool {
    let offset = match target {
        SpectrumTarget::TwoPiZ => 0.0,
        SpectrumTarget::OddPiZ => PI,
    };
    forcing.declared_spectrum().iter().all(|w| {
        let q = (w - offset) / (2.0 * PI);
        (q - q.round()).abs() * 2.0 * PI <= FREQ_TOL
    })
}

/// Sliding-window Fourier amplitudes ∫_T^{T+1} e^{-iωt} u(t) dt (trapezoid,
/// Euclidean norm across modes) — report diagnostics only, never gating.
pub fn fourier_diagnostic(traj: &Trajectory, omega: f64, windows: &[f64]) -> Result<Vec<f64>> {
    let spu = traj.grid.steps_per_unit()?;
    let dt = traj.grid.dt();
    let mut out = Vec::with_capacity(windows.len());
    for &t0 in windows {
        let k0 = grid_index(t0, spu, dt)?;
        if k0 + spu >= traj.grid.len() {
            return Err(FracError::InvalidParameter(format!(
                "window [{t0}, {t0}+1] exceeds the grid"
            )));
        }
        let mut acc = 0.0f64;
        for m in &traj.modes {
            let mut s = Complex64::new(0.0, 0.0);
            for k in k0..=k0 + spu {
                let t = traj.grid.t(k);
                let w = if k == k0 || k == k0 + spu { 0.5 } else { 1.0 };
                s += w * Complex64::new(0.0, -omega * t).exp() * m[k];
            }
            acc += (s * dt).norm_sqr();
        }
        out.push(acc.sqrt());
    }
    Ok(out)
}

/// End-to-end verdict. Checks, in order: the Katznelson-Tzafriri hypothesis
/// with p = 0 and with p = π (each together with the matching decay
/// evidence), then the Massera hypothesis on the particular solution
/// u = F_α f (the x0 = 0 trajectory, re-solved if the given trajectory has a
/// nonzero initial state), else Inconclusive.
pub fn classify_scenario(
    op: &DiagonalOperator,
    alpha: FracOrder,
    forcing: &ForcingSpec,
    traj: &Trajectory,
    params: &ClassifyParams,
) -> Result<Classification> {
    let sigma = sigma_i(op, alpha, params.include_conjugates)?;
    let freqs = forcing.declared_spectrum();
    let kt_periodic = katznelson_tzafriri_hypothesis(&sigma, &freqs, PeriodicityVariant::Periodic);
    let kt_anti_periodic =
        katznelson_tzafriri_hypothesis(&sigma, &freqs, PeriodicityVariant::AntiPeriodic)
            && forcing_spectrum_check(forcing, SpectrumTarget::OddPiZ);
    let massera = massera_flags(op, alpha, &sigma, &freqs);
    let hypothesis_flags = HypothesisFlags {
        kt_periodic,
        kt_anti_periodic,
        massera,
    };

    let profile_0 = periodicity_profile(traj, 0.0, &params.windows)?;
    let decays_0 = decay_verdict(&profile_0, params.ratio, params.floor)?;

    if kt_periodic && decays_0 {
        return Ok(Classification {
            verdict: Verdict::AllAsymptotic1Periodic,
            evidence: profile_0,
            hypothesis_flags,
            sigma,
        });
    }
    if kt_anti_periodic {
        let profile_pi = periodicity_profile(traj, PI, &params.windows)?;
        if decay_verdict(&profile_pi, params.ratio, params.floor)? {
            return Ok(Classification {
                verdict: Verdict::AllAsymptoticAnti1Periodic,
                evidence: profile_pi,
                hypothesis_flags,
                sigma,
            });
        }
    }
    if massera.holds() {
        let zero_initial = traj.initial.iter().all(|z| z.norm() == 0.0);
        let particular;
        let part_ref = if zero_initial {
            traj
        } else {
            let x0 = vec![Complex64::new(0.0, 0.0); op.n_modes()];
            particular = solve(alpha, op, &x0, forcing, traj.grid, params.threads)?;
            &particular
        };
        let profile = periodicity_profile(part_ref, 0.0, &params.windows)?;
        if decay_verdict(&profile, params.ratio, params.floor)? {
            return Ok(Classification {
                verdict: Verdict::MasseraExistence,
                evidence: profile,
                hypothesis_flags,
                sigma,
            });
        }
    }
    let evidence = if params.bloch_p != 0.0 {
        periodicity_profile(traj, params.bloch_p, &params.windows)?
    } else {
        profile_0
    };
    Ok(Classification {
        verdict: Verdict::Inconclusive,
        evidence,
        hypothesis_flags,
        sigma,
    })
}
