//! Python bindings for the fracperiod library.
//!
//! Build the extension with `cargo build -p fracperiod-py --release` and put
//! the resulting `libfracperiod_py.so` on the Python path as
//! `fracperiod_py.so`; see python/smoke_test.py for a worked example.

use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use fracperiod::{
    classify_scenario, exp_sigma as exp_sigma_rs, mainardi_density as mainardi_rs, mild_residual,
    mittag_leffler as ml_rs, sigma_i as sigma_i_rs, solve as solve_rs, ClassifyParams,
    DiagonalOperator, ForcingSpec, ForcingTerm, FracOrder, MlParams, TimeGrid,
};

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn operator(eigenvalues: Vec<Complex64>) -> PyResult<DiagonalOperator> {
    DiagonalOperator::explicit(eigenvalues).map_err(err)
}

fn order(alpha: f64) -> PyResult<FracOrder> {
    FracOrder::new(alpha).map_err(err)
}

/// (omega, amplitude) pairs per mode, plus an optional decay term
/// d_m e^{-gamma t}, assembled into a ForcingSpec.
fn forcing(
    modes: Vec<Vec<(f64, Complex64)>>,
    decay_d: Option<Vec<Complex64>>,
    decay_gamma: f64,
) -> PyResult<ForcingSpec> {
    let modes = modes
        .into_iter()
        .map(|m| {
            m.into_iter()
                .map(|(omega, amplitude)| ForcingTerm { omega, amplitude })
                .collect()
        })
        .collect();
    let spec = ForcingSpec::new(modes, None).map_err(err)?;
    match decay_d {
        Some(d) => spec.with_decay(d, decay_gamma).map_err(err),
        None => Ok(spec),
    }
}

/// E_{alpha,beta}(z). Real z covers all regimes; complex z is served by the
/// series regime (|z| <= 10).
#[pyfunction]
fn mittag_leffler(alpha: f64, beta: f64, z: Complex64) -> PyResult<Complex64> {
    let params = MlParams::new(alpha, beta).map_err(err)?;
    ml_rs(params, z).map_err(err)
}

/// The Mainardi density Phi_alpha(theta), theta >= 0, 0 < alpha < 1.
#[pyfunction]
fn mainardi_density(alpha: f64, theta: f64) -> PyResult<f64> {
    mainardi_rs(alpha, theta).map_err(err)
}

/// Eigenvalues mu_n = -a n^2 of the scaled 1-d Dirichlet Laplacian, over
/// n = 1..=n_modes, or over odd n only.
#[pyfunction]
#[pyo3(signature = (a, n_modes, odd = false))]
fn laplacian_eigenvalues(a: f64, n_modes: usize, odd: bool) -> PyResult<Vec<Complex64>> {
    let op = if odd {
        DiagonalOperator::dirichlet_laplacian_1d_odd(a, n_modes)
    } else {
        DiagonalOperator::dirichlet_laplacian_1d(a, n_modes)
    };
    Ok(op.map_err(err)?.eigenvalues().to_vec())
}

/// The fractional imaginary spectral set Sigma_i(A, alpha) for the diagonal
/// operator with the given eigenvalues.
#[pyfunction]
#[pyo3(signature = (eigenvalues, alpha, include_conjugates = false))]
fn sigma_i(
    eigenvalues: Vec<Complex64>,
    alpha: f64,
    include_conjugates: bool,
) -> PyResult<Vec<Complex64>> {
    let op = operator(eigenvalues)?;
    let s = sigma_i_rs(&op, order(alpha)?, include_conjugates).map_err(err)?;
    Ok(s.points)
}

/// e^{Sigma_i(A, alpha)}: the unit-circle image of the spectral set.
#[pyfunction]
#[pyo3(signature = (eigenvalues, alpha, include_conjugates = false))]
fn exp_sigma(
    eigenvalues: Vec<Complex64>,
    alpha: f64,
    include_conjugates: bool,
) -> PyResult<Vec<Complex64>> {
    let op = operator(eigenvalues)?;
    let s = sigma_i_rs(&op, order(alpha)?, include_conjugates).map_err(err)?;
    Ok(exp_sigma_rs(&s).points)
}

/// A mild solution on a uniform grid.
#[pyclass]
struct Trajectory {
    inner: fracperiod::Trajectory,
    residual: f64,
}

#[pymethods]
impl Trajectory {
    /// Grid times t_0, ..., t_N.
    fn times(&self) -> Vec<f64> {
        self.inner.grid.times().collect()
    }

    /// Samples of mode m (0-based).
    fn mode(&self, m: usize) -> PyResult<Vec<Complex64>> {
        self.inner
            .modes
            .get(m)
            .cloned()
            .ok_or_else(|| err(format!("mode {m} out of range")))
    }

    /// Euclidean norm of the state at each grid point.
    fn norms(&self) -> Vec<f64> {
        (0..self.inner.grid.len())
            .map(|k| self.inner.norm_at(k))
            .collect()
    }

    /// Max-norm defect in the mild-solution identity.
    #[getter]
    fn mild_residual(&self) -> f64 {
        self.residual
    }
}

#[allow(clippy::too_many_arguments)]
fn solve_impl(
    alpha: f64,
    eigenvalues: Vec<Complex64>,
    x0: Vec<Complex64>,
    forcing_modes: Vec<Vec<(f64, Complex64)>>,
    t_max: f64,
    dt: f64,
    decay_d: Option<Vec<Complex64>>,
    decay_gamma: f64,
    threads: usize,
) -> PyResult<(DiagonalOperator, ForcingSpec, fracperiod::Trajectory)> {
    let al = order(alpha)?;
    let op = operator(eigenvalues)?;
    let f = forcing(forcing_modes, decay_d, decay_gamma)?;
    let grid = TimeGrid::from_t_max(dt, t_max).map_err(err)?;
    let traj = solve_rs(al, &op, &x0, &f, grid, threads).map_err(err)?;
    Ok((op, f, traj))
}

/// Solve D^alpha_C u = A u + f, u(0) = x0, on [0, t_max] with step dt.
/// Forcing per mode: a list of (omega, amplitude) pairs giving
/// sum_j amplitude_j e^{i omega_j t}, plus an optional decay term
/// d e^{-gamma t}.
#[pyfunction]
#[pyo3(signature = (alpha, eigenvalues, x0, forcing_modes, t_max, dt,
                    decay_d = None, decay_gamma = 1.0, threads = 0))]
#[allow(clippy::too_many_arguments)]
fn solve(
    alpha: f64,
    eigenvalues: Vec<Complex64>,
    x0: Vec<Complex64>,
    forcing_modes: Vec<Vec<(f64, Complex64)>>,
    t_max: f64,
    dt: f64,
    decay_d: Option<Vec<Complex64>>,
    decay_gamma: f64,
    threads: usize,
) -> PyResult<Trajectory> {
    let al = order(alpha)?;
    let (op, f, traj) = solve_impl(
        alpha,
        eigenvalues,
        x0,
        forcing_modes,
        t_max,
        dt,
        decay_d,
        decay_gamma,
        threads,
    )?;
    let residual = mild_residual(al, &op, &traj, &f.sample(traj.grid)).map_err(err)?;
    Ok(Trajectory {
        inner: traj,
        residual,
    })
}

/// Solve and classify the scenario. Returns (verdict, residuals): the
/// verdict string and the d(T) profile at the evidence Bloch parameter.
#[pyfunction]
#[pyo3(signature = (alpha, eigenvalues, x0, forcing_modes, t_max, dt,
                    decay_d = None, decay_gamma = 1.0,
                    windows = vec![2.0, 6.0, 10.0], ratio = 0.5, floor = 1e-6,
                    include_conjugates = false, bloch_p = 0.0, threads = 0))]
#[allow(clippy::too_many_arguments)]
fn classify(
    alpha: f64,
    eigenvalues: Vec<Complex64>,
    x0: Vec<Complex64>,
    forcing_modes: Vec<Vec<(f64, Complex64)>>,
    t_max: f64,
    dt: f64,
    decay_d: Option<Vec<Complex64>>,
    decay_gamma: f64,
    windows: Vec<f64>,
    ratio: f64,
    floor: f64,
    include_conjugates: bool,
    bloch_p: f64,
    threads: usize,
) -> PyResult<(String, Vec<f64>)> {
    let al = order(alpha)?;
    let (op, f, traj) = solve_impl(
        alpha,
        eigenvalues,
        x0,
        forcing_modes,
        t_max,
        dt,
        decay_d,
        decay_gamma,
        threads,
    )?;
    let params = ClassifyParams {
        windows,
        ratio,
        floor,
        include_conjugates,
        bloch_p,
        threads,
    };
    let cls = classify_scenario(&op, al, &f, &traj, &params).map_err(err)?;
    Ok((cls.verdict.as_str().to_string(), cls.evidence.residuals))
}

#[pymodule]
fn fracperiod_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(mittag_leffler, m)?)?;
    m.add_function(wrap_pyfunction!(mainardi_density, m)?)?;
    m.add_function(wrap_pyfunction!(laplacian_eigenvalues, m)?)?;
    m.add_function(wrap_pyfunction!(sigma_i, m)?)?;
    m.add_function(wrap_pyfunction!(exp_sigma, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_class::<Trajectory>()?;
    Ok(())
}
