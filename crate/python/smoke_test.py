#!/usr/bin/env python3
"""Smoke test of the fraclap_py extension module.

Builds nothing itself: run `cargo build -p fraclap-py --release` first, then
`python3 python/smoke_test.py`.
"""

import math
import shutil
import sys
import tempfile
from pathlib import Path


def load_module():
    root = Path(__file__).resolve().parent.parent
    candidates = [
        root / "target" / "release" / "libfraclap_py.so",
        root / "target" / "debug" / "libfraclap_py.so",
    ]
    lib = next((p for p in candidates if p.exists()), None)
    if lib is None:
        sys.exit("libfraclap_py.so not found; run `cargo build -p fraclap-py --release`")
    staging = Path(tempfile.mkdtemp(prefix="fraclap_py_"))
    shutil.copy(lib, staging / "fraclap_py.so")
    sys.path.insert(0, str(staging))
    import fraclap_py

    return fraclap_py


def approx(value, expected, tol, label):
    if abs(value - expected) > tol:
        sys.exit(f"FAIL {label}: got {value!r}, want {expected!r} (tol {tol})")
    print(f"ok {label}: {value}")


def main():
    m = load_module()

    approx(m.gamma(0.5), math.sqrt(math.pi), 1e-14, "gamma(1/2) = sqrt(pi)")
    approx(m.riesz_ball_constant(1, 0.5), 1.0, 1e-12, "c(1,1/2) = 1")
    approx(
        m.fundamental_constant(1, 0.25),
        1.0 / math.sqrt(2.0 * math.pi),
        1e-12,
        "a(1,1/4) = 1/sqrt(2 pi)",
    )
    approx(
        m.riesz_constant_rhs([0.6], 1, 0.5),
        math.sqrt(1.0 - 0.36),
        1e-12,
        "u_R(0.6) at s = 1/2",
    )

    rows = m.boundary_ratio_table([0.25, 0.5, 0.75], 2.0 ** -10, 1, 20, 10_000)
    table = {(round(s, 4), form): (lo, hi) for s, form, _, lo, hi in rows}
    lo, hi = table[(0.25, "riesz")]
    approx(lo, 1.3386, 2e-3, "table row (0.25, riesz) min")
    approx(hi, 1.3417, 2e-3, "table row (0.25, riesz) max")
    lo, hi = table[(0.5, "spectral_log")]
    approx(lo, 1.0606, 2e-3, "table row (0.5, spectral_log) min")
    approx(hi, 1.0717, 2e-3, "table row (0.5, spectral_log) max")

    k_values, median = m.log_exponent_estimate(1e-4, 1, 5, 100_000)
    if not all(0.7 < k < 1.0 for k in k_values):
        sys.exit(f"FAIL exponent estimates out of range: {k_values}")
    print(f"ok exponent estimate: median {median:.4f}")

    v = m.spectral_dirac_2d(0.3, 0.4, 0.75, 256)
    v_swapped = m.spectral_dirac_2d(0.4, 0.3, 0.75, 256)
    approx(v_swapped, v, 1e-12, "w_2s symmetry under coordinate swap")

    coeffs = m.LiftCoefficients(0.6)
    u = m.spectral_dirac_solution_2d(0.0, 1.0, 0.6, 256, coeffs)
    approx(u, m.fundamental_constant(2, 0.6), 1e-3, "2D Dirac boundary trace at (0,1)")

    crossings, value, terms = m.probe("w1_at_0", [2.0], s=0.45, budget=1_000_000)
    if crossings[0][1] is None:
        sys.exit("FAIL divergence probe: threshold 2 not crossed")
    print(f"ok divergence probe: crossed at {crossings[0][1]} of {terms} terms (sum {value:.4f})")

    print("smoke test passed")


if __name__ == "__main__":
    main()
