#!/usr/bin/env python3
"""Smoke test for the fracperiod_py extension module.

Build and run:

    cargo build -p fracperiod-py --release
    mkdir -p python/_build
    cp target/release/libfracperiod_py.so python/_build/fracperiod_py.so
    python3 python/smoke_test.py
"""

import math
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).parent / "_build"))

import fracperiod_py as fp  # noqa: E402

PI = math.pi
checks = 0


def check(label, cond):
    global checks
    if not cond:
        raise SystemExit(f"FAIL {label}")
    checks += 1
    print(f"ok {label}")


# --- Mittag-Leffler -------------------------------------------------------
e = fp.mittag_leffler(1.0, 1.0, 1.0)
check("E_1,1(1) = e", abs(e - math.e) < 1e-14)

v = fp.mittag_leffler(0.5, 1.0, -1.0)
# extended-precision closed form exp(1) erfc(1)
check("E_1/2,1(-1)", abs(v - 0.42758357615580700) < 1e-12)

z = fp.mittag_leffler(0.8, 1.0, 1 + 2j)
check("complex argument accepted", isinstance(z, complex))

# --- Mainardi density ------------------------------------------------------
# Phi_{1/2}(theta) = exp(-theta^2/4)/sqrt(pi)
for theta in (0.0, 0.5, 1.0, 2.0):
    want = math.exp(-theta * theta / 4.0) / math.sqrt(PI)
    check(
        f"Phi_1/2({theta})",
        abs(fp.mainardi_density(0.5, theta) - want) < 1e-10,
    )

# --- spectral sets ---------------------------------------------------------
a = PI ** (2.0 / 3.0)
mu = fp.laplacian_eigenvalues(a, 5)
check("eigenvalues mu_n = -a n^2", abs(mu[2] - (-9 * a)) < 1e-12)

sig = fp.sigma_i(mu, 2.0 / 3.0)
want = sorted(-(n**3) * PI for n in range(1, 6))
got = sorted(s.imag for s in sig)
check(
    "sigma_i = {-i n^3 pi}",
    all(abs(g - w) < 1e-9 * abs(w) for g, w in zip(got, want))
    and all(s.real == 0.0 for s in sig),
)

circle = sorted(z.real for z in fp.exp_sigma(mu, 2.0 / 3.0))
check(
    "exp(sigma_i) = {1, -1}",
    len(circle) == 2 and abs(circle[0] + 1) < 1e-9 and abs(circle[1] - 1) < 1e-9,
)

# --- mild solution ---------------------------------------------------------
traj = fp.solve(0.5, [-1.0 + 0j], [1.0 + 0j], [[]], 5.0, 1e-3)
u = traj.mode(0)
t = traj.times()
k = t.index(1.0) if 1.0 in t else round(1.0 / 1e-3)
check("relaxation u(1) = E_1/2,1(-1)", abs(u[k].real - 0.42758357615580700) < 1e-6)
check("mild residual small", traj.mild_residual < 5e-3)
check("norms() length", len(traj.norms()) == len(t))

# --- classification --------------------------------------------------------
a2 = (2.0 * PI) ** 0.4
mu2 = fp.laplacian_eigenvalues(a2, 3)
cos_forcing = [[(2.0 * PI, 0.5 + 0j), (-2.0 * PI, 0.5 + 0j)]] * 3
verdict, residuals = fp.classify(
    0.4,
    mu2,
    [1.0 + 0j, 1.0 + 0j, 0j],
    cos_forcing,
    13.0,
    0.01,
    include_conjugates=True,
)
check("periodic scenario verdict", verdict == "AllAsymptotic1Periodic")
check("d(T) profile decays", residuals[-1] < 0.5 * residuals[0])

verdict, _ = fp.classify(
    0.5,
    [-1.0 + 0j],
    [0j],
    [[(1.0, 0.5 + 0j), (-1.0, 0.5 + 0j)]],
    13.0,
    0.01,
)
check("negative control verdict", verdict == "Inconclusive")

print(f"smoke test passed ({checks} checks)")
