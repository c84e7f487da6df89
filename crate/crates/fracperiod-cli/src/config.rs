//! Scenario configuration: JSON schema, validation with field paths, and
//! conversion into the library's domain types.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use fracperiod::{ClassifyParams, DiagonalOperator, ForcingSpec, ForcingTerm, FracOrder, TimeGrid};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub alpha: f64,
    pub operator: OperatorConfig,
    pub forcing: ForcingConfig,
    pub initial: Vec<[f64; 2]>,
    pub grid: GridConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classify: Option<ClassifyConfig>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum OperatorConfig {
    /// μ_n = -a n², n = 1..=n_modes
    #[serde(rename = "dirichlet_laplacian_1d")]
    DirichletLaplacian1d { a: f64, n_modes: usize },
    /// μ_n = -a n² over odd n only
    #[serde(rename = "dirichlet_laplacian_1d_odd")]
    DirichletLaplacian1dOdd { a: f64, n_modes: usize },
    Explicit { eigenvalues: Vec<[f64; 2]> },
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ForcingConfig {
    /// terms[n] lists the trigonometric components of mode n
    pub modes: Vec<Vec<ForcingTermConfig>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decay: Option<DecayConfig>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ForcingTermConfig {
    pub omega: f64,
    pub amplitude_re: f64,
    #[serde(default)]
    pub amplitude_im: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct DecayConfig {
    pub d: Vec<[f64; 2]>,
    pub gamma: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub t_max: f64,
    pub dt: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ClassifyConfig {
    pub windows: Vec<f64>,
    #[serde(default = "default_ratio")]
    pub ratio: f64,
    #[serde(default = "default_floor")]
    pub floor: f64,
    #[serde(default)]
    pub include_conjugates: bool,
    #[serde(default)]
    pub bloch_p: f64,
}

fn default_ratio() -> f64 {
    0.5
}

fn default_floor() -> f64 {
    1e-6
}

/// A config validation failure, carrying the offending field path.
#[derive(Debug)]
pub struct ConfigError {
    pub field: String,
    pub message: String,
}

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "config error at {}: {}", self.field, self.message)
    }
}

impl std::error::Error for ConfigError {}

fn err(field: &str, message: impl Into<String>) -> ConfigError {
    ConfigError {
        field: field.to_string(),
        message: message.into(),
    }
}

/// Validated, library-typed scenario ready to run.
pub struct Scenario {
    pub alpha: FracOrder,
    pub operator: DiagonalOperator,
    pub forcing: ForcingSpec,
    pub initial: Vec<Complex64>,
    pub grid: TimeGrid,
    pub classify: Option<ClassifyParams>,
}

impl ScenarioConfig {
    pub fn from_path(path: &std::path::Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| err("(file)", format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| err("(json)", e.to_string()))
    }

    pub fn build(&self, threads: usize) -> Result<Scenario, ConfigError> {
        let alpha = FracOrder::new(self.alpha)
            .map_err(|e| err("alpha", e.to_string()))?;

        let operator = match &self.operator {
            OperatorConfig::DirichletLaplacian1d { a, n_modes } => {
                DiagonalOperator::dirichlet_laplacian_1d(*a, *n_modes)
                    .map_err(|e| err("operator", e.to_string()))?
            }
            OperatorConfig::DirichletLaplacian1dOdd { a, n_modes } => {
                DiagonalOperator::dirichlet_laplacian_1d_odd(*a, *n_modes)
                    .map_err(|e| err("operator", e.to_string()))?
            }
            OperatorConfig::Explicit { eigenvalues } => DiagonalOperator::explicit(
                eigenvalues.iter().map(|p| Complex64::new(p[0], p[1])).collect(),
            )
            .map_err(|e| err("operator.eigenvalues", e.to_string()))?,
        };
        let n = operator.n_modes();

        if self.forcing.modes.len() != n {
            return Err(err(
                "forcing.modes",
                format!("{} mode lists for an operator with {n} modes", self.forcing.modes.len()),
            ));
        }
        let modes = self
            .forcing
            .modes
            .iter()
            .map(|terms| {
                terms
                    .iter()
                    .map(|t| ForcingTerm {
                        omega: t.omega,
                        amplitude: Complex64::new(t.amplitude_re, t.amplitude_im),
                    })
                    .collect()
            })
            .collect();
        let mut forcing =
            ForcingSpec::new(modes, None).map_err(|e| err("forcing", e.to_string()))?;
        if let Some(decay) = &self.forcing.decay {
            forcing = forcing
                .with_decay(
                    decay.d.iter().map(|p| Complex64::new(p[0], p[1])).collect(),
                    decay.gamma,
                )
                .map_err(|e| err("forcing.decay", e.to_string()))?;
        }

        if self.initial.len() != n {
            return Err(err(
                "initial",
                format!("{} entries for an operator with {n} modes", self.initial.len()),
            ));
        }
        let initial = self.initial.iter().map(|p| Complex64::new(p[0], p[1])).collect();

        let grid = TimeGrid::from_t_max(self.grid.dt, self.grid.t_max)
            .map_err(|e| err("grid", e.to_string()))?;

        let classify = match &self.classify {
            None => None,
            Some(c) => {
                grid.steps_per_unit().map_err(|_| {
                    err("grid.dt", "1/dt must be an integer when classification is requested")
                })?;
                let max_window = c.windows.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
                if c.windows.is_empty() || c.windows.windows(2).any(|w| w[1] <= w[0]) {
                    return Err(err("classify.windows", "must be nonempty, strictly increasing"));
                }
                if max_window + 2.0 > self.grid.t_max + 1e-12 {
                    return Err(err(
                        "classify.windows",
                        format!("t_max must cover max(window)+2 = {}", max_window + 2.0),
                    ));
                }
                if !(c.ratio > 0.0 && c.ratio < 1.0) {
                    return Err(err("classify.ratio", "must lie in (0, 1)"));
                }
                if !(c.floor > 0.0) {
                    return Err(err("classify.floor", "must be positive"));
                }
                Some(ClassifyParams {
                    windows: c.windows.clone(),
                    ratio: c.ratio,
                    floor: c.floor,
                    include_conjugates: c.include_conjugates,
                    bloch_p: c.bloch_p,
                    threads,
                })
            }
        };

        Ok(Scenario {
            alpha,
            operator,
            forcing,
            initial,
            grid,
            classify,
        })
    }
}
