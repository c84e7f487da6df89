//! Embedded acceptance matrix: the published anchor values, re-checked at
//! startup cost. Prints one PASS/FAIL line per criterion; exit 3 on the
//! first failure, naming the criterion.

use std::f64::consts::PI;
use std::process::ExitCode;

use num_complex::Complex64;

use fracperiod::{
    exp_sigma, katznelson_tzafriri_hypothesis, massera_hypothesis, mittag_leffler_real, sigma_i,
    solve_mode, subordination_identity_residual, DiagonalOperator, FracOrder, MlParams,
    PeriodicityVariant, SampledFunction, TimeGrid,
};

type Check = (&'static str, fn() -> Result<(), String>);

fn order(a: f64) -> FracOrder {
    FracOrder::new(a).unwrap()
}

fn example_3_18_sigma() -> Result<(), String> {
    let a = PI.powf(2.0 / 3.0);
    let op = DiagonalOperator::dirichlet_laplacian_1d(a, 5).map_err(|e| e.to_string())?;
    let s = sigma_i(&op, order(2.0 / 3.0), false).map_err(|e| e.to_string())?;
    if s.points.len() != 5 {
        return Err(format!("expected 5 points, got {}", s.points.len()));
    }
    for (n, lam) in (1..=5).zip(&s.points) {
        let expect = -((n * n * n) as f64) * PI;
        if lam.re != 0.0 || (lam.im - expect).abs() > 1e-12 * expect.abs() {
            return Err(format!("point {n}: {lam} vs {expect}i"));
        }
    }
    let e = exp_sigma(&s);
    let mut reals: Vec<f64> = e.points.iter().map(|z| z.re).collect();
    reals.sort_by(f64::total_cmp);
    if e.points.len() != 2 || (reals[0] + 1.0).abs() > 1e-9 || (reals[1] - 1.0).abs() > 1e-9 {
        return Err(format!("exp_sigma {:?}, expected {{1, -1}}", e.points));
    }
    Ok(())
}

fn example_2_sigma() -> Result<(), String> {
    let a = (2.0 * PI).powf(0.4);
    let op = DiagonalOperator::dirichlet_laplacian_1d(a, 3).map_err(|e| e.to_string())?;
    let s = sigma_i(&op, order(0.4), true).map_err(|e| e.to_string())?;
    let mut ims: Vec<f64> = s.points.iter().map(|z| z.im).collect();
    ims.sort_by(f64::total_cmp);
    let expect = [-486.0 * PI, -64.0 * PI, -2.0 * PI, 2.0 * PI, 64.0 * PI, 486.0 * PI];
    if ims.len() != 6 {
        return Err(format!("expected 6 points, got {}", ims.len()));
    }
    for (g, e) in ims.iter().zip(expect) {
        if (g - e).abs() > 1e-12 * e.abs() {
            return Err(format!("{g} vs {e}"));
        }
    }
    let e = exp_sigma(&s);
    if e.points.len() != 1 || (e.points[0] - Complex64::new(1.0, 0.0)).norm() > 1e-9 {
        return Err(format!("exp_sigma {:?}, expected {{1}}", e.points));
    }
    if !katznelson_tzafriri_hypothesis(&s, &[2.0 * PI], PeriodicityVariant::Periodic) {
        return Err("KT Periodic hypothesis should hold for freq 2 pi".into());
    }
    Ok(())
}

fn ml_values() -> Result<(), String> {
    let e11 = mittag_leffler_real(MlParams::new(1.0, 1.0).unwrap(), 1.0).map_err(|e| e.to_string())?;
    if (e11 - std::f64::consts::E).abs() > 1e-14 {
        return Err(format!("E_1,1(1) = {e11}"));
    }
    let v = mittag_leffler_real(MlParams::new(0.5, 1.0).unwrap(), -1.0).map_err(|e| e.to_string())?;
    if (v - 0.42758357615580700).abs() > 1e-12 {
        return Err(format!("E_1/2,1(-1) = {v}"));
    }
    for &(a, b) in &[(0.3, 1.0), (0.5, 0.5), (0.7, 1.4), (0.9, 0.9), (1.0, 2.0)] {
        let g = fracperiod::gamma::gamma(b);
        let z = mittag_leffler_real(MlParams::new(a, b).unwrap(), 0.0).map_err(|e| e.to_string())?;
        if (z * g - 1.0).abs() > 1e-12 {
            return Err(format!("E_{a},{b}(0) Gamma({b}) = {}", z * g));
        }
    }
    Ok(())
}

fn ml_identities() -> Result<(), String> {
    let p = MlParams::new(1.0, 1.0).unwrap();
    let mut x = -30.0;
    while x <= 5.0 {
        let v = mittag_leffler_real(p, x).map_err(|e| e.to_string())?;
        if (v - x.exp()).abs() > 1e-12 * x.exp() {
            return Err(format!("E_1,1({x}) = {v} vs {}", x.exp()));
        }
        x += 2.5;
    }
    let p2 = MlParams::new(2.0, 1.0).unwrap();
    let mut t = 0.0;
    while t <= 6.0 {
        let v = mittag_leffler_real(p2, -t * t).map_err(|e| e.to_string())?;
        if (v - t.cos()).abs() > 1e-10 {
            return Err(format!("E_2,1(-{t}^2) = {v} vs {}", t.cos()));
        }
        t += 0.5;
    }
    Ok(())
}

fn subordination() -> Result<(), String> {
    let r = subordination_identity_residual(0.5, 1.0, 2048).map_err(|e| e.to_string())?;
    if r > 1e-6 {
        return Err(format!("residual {r:.2e} > 1e-6"));
    }
    Ok(())
}

fn inversion() -> Result<(), String> {
    let grid = TimeGrid::from_t_max(1e-3, 1.0).map_err(|e| e.to_string())?;
    let u = SampledFunction::from_scalar_fn(grid, |t| Complex64::new(t * t, 0.0));
    let r = fracperiod::inversion_residual(order(0.5), &u).map_err(|e| e.to_string())?;
    if r > 5e-3 {
        return Err(format!("residual {r:.2e} > 5e-3"));
    }
    Ok(())
}

fn relaxation() -> Result<(), String> {
    let grid = TimeGrid::from_t_max(1e-2, 2.0).map_err(|e| e.to_string())?;
    let f = vec![Complex64::new(0.0, 0.0); grid.len()];
    let u = solve_mode(
        order(0.5),
        Complex64::new(-1.0, 0.0),
        Complex64::new(1.0, 0.0),
        &f,
        grid,
    )
    .map_err(|e| e.to_string())?;
    let v = u[100].re; // t = 1
    if (v - 0.42758357615580700).abs() > 1e-6 {
        return Err(format!("u(1) = {v} vs E_1/2,1(-1)"));
    }
    Ok(())
}

fn massera_example() -> Result<(), String> {
    let a = PI.powf(2.0 / 3.0);
    let op = DiagonalOperator::dirichlet_laplacian_1d(a, 5).map_err(|e| e.to_string())?;
    let al = order(2.0 / 3.0);
    let s = sigma_i(&op, al, false).map_err(|e| e.to_string())?;
    if !massera_hypothesis(&op, al, &s, &[2.0 * PI]) {
        return Err("Massera hypothesis should hold for Example 3.18".into());
    }
    if massera_hypothesis(&op, al, &s, &[1.0]) {
        return Err("Massera hypothesis should reject frequency 1.0".into());
    }
    Ok(())
}

pub fn run() -> ExitCode {
    let checks: &[Check] = &[
        ("example-3.18-sigma", example_3_18_sigma),
        ("example-2-sigma", example_2_sigma),
        ("ml-values", ml_values),
        ("ml-identities", ml_identities),
        ("subordination", subordination),
        ("fractional-inversion", inversion),
        ("scalar-relaxation", relaxation),
        ("massera-hypothesis", massera_example),
    ];
    let mut failed: Option<&str> = None;
    for &(name, check) in checks {
        match check() {
            Ok(()) => println!("PASS {name}"),
            Err(msg) => {
                println!("FAIL {name}: {msg}");
                failed.get_or_insert(name);
            }
        }
    }
    match failed {
        None => ExitCode::SUCCESS,
        Some(name) => {
            eprintln!("fracperiod: self-test failed at criterion {name}");
            ExitCode::from(3)
        }
    }
}
