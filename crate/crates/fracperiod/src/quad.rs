//! Gauss-Legendre quadrature (Newton iteration on the Legendre recurrence).

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = (n + 1) / 2;
    for i in 0..m {
        // Chebyshev-based initial guess
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // evaluate P_n(x) and P_n'(x) by the three-term recurrence
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

/// Composite Gauss-Legendre integral of `f` on [a, b] using `n_total` nodes
/// split into panels of (up to) 16 nodes each.
pub fn composite_gauss_legendre<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    n_total: usize,
) -> f64 {
    let per_panel = n_total.min(16).max(1);
    let panels = (n_total + per_panel - 1) / per_panel;
    let (nodes, weights) = gauss_legendre(per_panel);
    let hw = (b - a) / panels as f64;
    let mut acc = 0.0;
    for p in 0..panels {
        let lo = a + p as f64 * hw;
        let mid = lo + 0.5 * hw;
        let half = 0.5 * hw;
        let mut panel = 0.0;
        for (x, w) in nodes.iter().zip(weights.iter()) {
            panel += w * f(mid + half * x);
        }
        acc += panel * half;
    }
    acc
}
