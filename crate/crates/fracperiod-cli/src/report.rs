//! JSON run report: spectral sets, hypothesis flags, verdict, decay table,
//! residuals and provenance fields.

use serde::{Deserialize, Serialize};

use fracperiod::{Classification, MasseraFlags, SpectralSet, UnitCircleSet};

pub const BRANCH_NOTE: &str = "sigma_i solves |lambda|^alpha e^{i pi} = mu on the branch \
arg lambda = pi/alpha wrapped into (-pi, pi]; under the strict principal power \
lambda^alpha the equation has no imaginary solutions for alpha < 1 and the set would be empty";

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunReport {
    pub tool_version: String,
    /// excluded from determinism comparisons
    pub timestamp: String,
    pub alpha: f64,
    /// number of modes retained in the operator truncation
    pub truncation_n_modes: usize,
    pub horizon_t_max: f64,
    pub branch_note: String,
    pub sigma_i: Vec<[f64; 2]>,
    pub exp_sigma: Vec<[f64; 2]>,
    pub hypothesis_flags: HypothesisReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_table: Option<DecayTable>,
    pub mild_residual: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fourier_diagnostic: Option<FourierDiagnostic>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub kt_periodic: bool,
    pub kt_anti_periodic: bool,
    pub massera: MasseraReport,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MasseraReport {
    pub exponentially_stable: bool,
    pub sector_free: bool,
    pub exp_sigma_closed: bool,
    pub forcing_one_periodic: bool,
    pub holds: bool,
}

impl From<MasseraFlags> for MasseraReport {
    fn from(f: MasseraFlags) -> Self {
        Self {
            exponentially_stable: f.exponentially_stable,
            sector_free: f.sector_free,
            exp_sigma_closed: f.exp_sigma_closed,
            forcing_one_periodic: f.forcing_one_periodic,
            holds: f.holds(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DecayTable {
    pub bloch_p: f64,
    pub windows: Vec<f64>,
    pub residuals: Vec<f64>,
}

/// Sliding-window amplitudes |∫_T^{T+1} e^{-iωt} u(t) dt| — supporting
/// evidence only, never part of the verdict rule.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FourierDiagnostic {
    pub omega: f64,
    pub windows: Vec<f64>,
    pub amplitudes: Vec<f64>,
}

pub fn points(s: &SpectralSet) -> Vec<[f64; 2]> {
    s.points.iter().map(|z| [z.re, z.im]).collect()
}

pub fn circle_points(s: &UnitCircleSet) -> Vec<[f64; 2]> {
    s.points.iter().map(|z| [z.re, z.im]).collect()
}

pub fn decay_table(c: &Classification) -> DecayTable {
    DecayTable {
        bloch_p: c.evidence.bloch_p,
        windows: c.evidence.windows.clone(),
        residuals: c.evidence.residuals.clone(),
    }
}
