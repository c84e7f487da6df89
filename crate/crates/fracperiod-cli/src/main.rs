//! `fracperiod` — scenario front end for the fractional-evolution library:
//! Mittag-Leffler evaluation, mild-solution synthesis, asymptotic-periodicity
//! classification, and an embedded self-test of the published anchor values.
//!
//! Exit codes: 0 success, 1 config error, 2 numeric domain error,
//! 3 self-test failure.

mod config;
mod report;
mod selftest;

use std::f64::consts::PI;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_complex::Complex64;

use fracperiod::{
    classify_scenario, exp_sigma, fourier_diagnostic, massera_flags, mild_residual, mittag_leffler,
    sigma_i, solve, FracError, katznelson_tzafriri_hypothesis, MlParams, PeriodicityVariant,
    Trajectory,
};

use config::{Scenario, ScenarioConfig};
use report::{
    circle_points, decay_table, points, FourierDiagnostic, HypothesisReport,
    MasseraReport, RunReport, BRANCH_NOTE,
};

#[derive(Parser)]
#[command(name = "fracperiod", version, about = "Caputo fractional evolution equations: solve, classify, inspect")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the Mittag-Leffler function E_{alpha,beta}(z)
    Ml {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        /// real ("-1.5") or complex ("3+4i"; needs --allow-complex)
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        /// accept complex z (series regime, |z| <= 10)
        #[arg(long)]
        allow_complex: bool,
    },
    /// Solve a scenario config; write trajectory.csv and report.json
    Solve {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Solve and classify a scenario; write report.json with the verdict
    Classify {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the embedded acceptance matrix
    Selftest,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Ml {
            alpha,
            beta,
            z,
            allow_complex,
        } => cmd_ml(alpha, beta, &z, allow_complex),
        Command::Solve { config, out } => cmd_solve(&config, &out, false),
        Command::Classify { config, out } => cmd_solve(&config, &out, true),
        Command::Selftest => selftest::run(),
    }
}

const EXIT_CONFIG: u8 = 1;
const EXIT_NUMERIC: u8 = 2;

fn fail(code: u8, message: impl std::fmt::Display) -> ExitCode {
    eprintln!("fracperiod: {message}");
    ExitCode::from(code)
}

/// 15 significant digits, shortest representation of the rounded value.
fn fmt_sig15(x: f64) -> String {
    let rounded: f64 = format!("{x:.14e}").parse().unwrap();
    format!("{rounded}")
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t = s.trim().replace(' ', "");
    if let Ok(re) = t.parse::<f64>() {
        return Ok(Complex64::new(re, 0.0));
    }
    let body = t
        .strip_suffix('i')
        .ok_or_else(|| format!("cannot parse '{s}' as a number"))?;
    // split into real part and imaginary coefficient at the last +/- that is
    // not an exponent sign or leading sign
    for (idx, c) in body.char_indices().rev() {
        if (c == '+' || c == '-') && idx > 0 {
            let prev = body.as_bytes()[idx - 1];
            if prev == b'e' || prev == b'E' {
                continue;
            }
            let re: f64 = body[..idx]
                .parse()
                .map_err(|_| format!("cannot parse real part of '{s}'"))?;
            let im_str = &body[idx..];
            let im: f64 = if im_str == "+" {
                1.0
            } else if im_str == "-" {
                -1.0
            } else {
                im_str.parse().map_err(|_| format!("cannot parse imaginary part of '{s}'"))?
            };
            return Ok(Complex64::new(re, im));
        }
    }
    let im: f64 = if body.is_empty() || body == "+" {
        1.0
    } else if body == "-" {
        -1.0
    } else {
        body.parse().map_err(|_| format!("cannot parse '{s}'"))?
    };
    Ok(Complex64::new(0.0, im))
}

fn cmd_ml(alpha: f64, beta: f64, z_str: &str, allow_complex: bool) -> ExitCode {
    let z = match parse_complex(z_str) {
        Ok(z) => z,
        Err(e) => return fail(EXIT_NUMERIC, e),
    };
    if z.im != 0.0 && !allow_complex {
        return fail(
            EXIT_NUMERIC,
            "complex z requires --allow-complex (series regime, |z| <= 10)",
        );
    }
    let params = match MlParams::new(alpha, beta) {
        Ok(p) => p,
        Err(e) => return fail(EXIT_NUMERIC, e),
    };
    match mittag_leffler(params, z) {
        Ok(v) if v.im == 0.0 => {
            println!("{}", fmt_sig15(v.re));
            ExitCode::SUCCESS
        }
        Ok(v) => {
            let sign = if v.im < 0.0 { "-" } else { "+" };
            println!("{}{}{}i", fmt_sig15(v.re), sign, fmt_sig15(v.im.abs()));
            ExitCode::SUCCESS
        }
        Err(e) => fail(EXIT_NUMERIC, e),
    }
}

fn threads_from_env() -> usize {
    std::env::var("FRACPERIOD_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(0)
}

fn trajectory_csv(traj: &Trajectory) -> String {
    let mut out = String::with_capacity(traj.grid.len() * traj.n_modes() * 32);
    out.push_str("t,mode,re,im\n");
    for k in 0..traj.grid.len() {
        let t = traj.grid.t(k);
        for (m, mode) in traj.modes.iter().enumerate() {
            let v = mode[k];
            out.push_str(&format!("{t},{},{},{}\n", m + 1, v.re, v.im));
        }
    }
    out
}

fn cmd_solve(config_path: &std::path::Path, out_dir: &std::path::Path, classify: bool) -> ExitCode {
    let cfg = match ScenarioConfig::from_path(config_path) {
        Ok(c) => c,
        Err(e) => return fail(EXIT_CONFIG, e),
    };
    let scenario = match cfg.build(threads_from_env()) {
        Ok(s) => s,
        Err(e) => return fail(EXIT_CONFIG, e),
    };
    if classify && scenario.classify.is_none() {
        return fail(EXIT_CONFIG, "config error at classify: section required by the classify command");
    }
    match run_scenario(&scenario, classify) {
        Ok((csv, report)) => {
            if let Err(e) = std::fs::create_dir_all(out_dir) {
                return fail(EXIT_CONFIG, format!("cannot create {}: {e}", out_dir.display()));
            }
            let json = serde_json::to_string_pretty(&report).expect("report serializes");
            // all writes happen here, once, after the computation succeeded
            if let Err(e) = std::fs::write(out_dir.join("trajectory.csv"), csv) {
                return fail(EXIT_CONFIG, format!("cannot write trajectory.csv: {e}"));
            }
            if let Err(e) = std::fs::write(out_dir.join("report.json"), json) {
                return fail(EXIT_CONFIG, format!("cannot write report.json: {e}"));
            }
            ExitCode::SUCCESS
        }
        Err(e) => match e {
            FracError::DimensionMismatch(_) | FracError::InvalidParameter(_) => {
                fail(EXIT_CONFIG, e)
            }
            _ => fail(EXIT_NUMERIC, e),
        },
    }
}

fn run_scenario(s: &Scenario, classify: bool) -> Result<(String, RunReport), FracError> {
    let traj = solve(
        s.alpha,
        &s.operator,
        &s.initial,
        &s.forcing,
        s.grid,
        s.classify.as_ref().map_or(0, |c| c.threads),
    )?;
    let residual = mild_residual(s.alpha, &s.operator, &traj, &s.forcing.sample(s.grid))?;

    let include_conjugates = s.classify.as_ref().is_some_and(|c| c.include_conjugates);
    let sigma = sigma_i(&s.operator, s.alpha, include_conjugates)?;
    let freqs = s.forcing.declared_spectrum();
    let massera = massera_flags(&s.operator, s.alpha, &sigma, &freqs);

    let mut rep = RunReport {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        timestamp: chrono::Utc::now().to_rfc3339(),
        alpha: s.alpha.get(),
        truncation_n_modes: s.operator.n_modes(),
        horizon_t_max: s.grid.t_max(),
        branch_note: BRANCH_NOTE.to_string(),
        sigma_i: points(&sigma),
        exp_sigma: circle_points(&exp_sigma(&sigma)),
        hypothesis_flags: HypothesisReport {
            kt_periodic: katznelson_tzafriri_hypothesis(
                &sigma,
                &freqs,
                PeriodicityVariant::Periodic,
            ),
            kt_anti_periodic: katznelson_tzafriri_hypothesis(
                &sigma,
                &freqs,
                PeriodicityVariant::AntiPeriodic,
            ),
            massera: MasseraReport::from(massera),
        },
        verdict: None,
        d_table: None,
        mild_residual: residual,
        fourier_diagnostic: None,
    };

    if classify {
        let params = s.classify.clone().expect("checked by caller");
        let cls = classify_scenario(&s.operator, s.alpha, &s.forcing, &traj, &params)?;
        rep.verdict = Some(cls.verdict.as_str().to_string());
        rep.d_table = Some(decay_table(&cls));
        // supporting evidence only: amplitude of the expected spectral line
        let omega = if (params.bloch_p - PI).abs() < 1e-9 { PI } else { 2.0 * PI };
        rep.fourier_diagnostic = Some(FourierDiagnostic {
            omega,
            windows: params.windows.clone(),
            amplitudes: fourier_diagnostic(&traj, omega, &params.windows)?,
        });
    }

    Ok((trajectory_csv(&traj), rep))
}
