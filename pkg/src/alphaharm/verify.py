"""Runtime invariant suites behind the ``verify`` command.

Each check computes a worst-case measurement and compares it to a fixed
tolerance; a perturbation (the falsifiability hook) is added to every
measurement before the comparison, so any nonzero perturbation beyond
the tolerances must fail the suite with the violated invariants named.
Given (suite, seed) the summary is deterministic and serializes to
canonical JSON.

Checks mirror the module invariants at desk scale; the pytest suite
runs the full-scale acceptance versions.
"""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

from . import analysis, boundary, kernel, solver, specfun
from .reporting import canonical_json

__all__ = ["SUITES", "run_verify"]

TWO_PI = 2.0 * math.pi


def _check(name: str, worst: float, tolerance: float, **details) -> dict:
    out = {"name": name, "worst": float(worst), "tolerance": float(tolerance)}
    out.update(details)
    return out


def _random_trig_poly(rng, degree: int, scale: float = 1.0):
    coeffs = scale * (rng.uniform(-1, 1, (2 * degree + 1, 2)) @ np.array([1.0, 1.0j]))
    spec = boundary.FourierSpectrum(coeffs)
    return spec, boundary.BoundaryFunction.from_spectrum(spec)


# ---------------------------------------------------------------------------
# specfun suite


def _specfun_checks(rng) -> list:
    checks = []

    worst = 0.0
    for _ in range(20):
        a, b = rng.uniform(-3, 3, 2)
        c = rng.uniform(0.2, 4.0)
        worst = max(worst, abs(specfun.hyp2f1(a, b, c, 0.0) - 1.0))
    checks.append(_check("series_at_zero_is_one", worst, 0.0))

    worst = 0.0
    for _ in range(20):
        a, b = rng.uniform(-2, 4, 2)
        c = rng.uniform(0.3, 5.0)
        x = rng.uniform(0.0, 0.9)
        f1 = specfun.hyp2f1(a, b, c, x)
        f2 = specfun.hyp2f1(b, a, c, x)
        worst = max(worst, abs(f1 - f2) / max(1.0, abs(f1)))
    checks.append(_check("argument_symmetry", worst, 1e-14))

    worst = 0.0
    for _ in range(10):
        m = int(rng.integers(1, 7))
        b = rng.uniform(0.2, 3.0)
        c = rng.uniform(0.4, 4.0)
        x = rng.uniform(0.0, 1.0)
        coeffs = [specfun.pochhammer(-m, k) * specfun.pochhammer(b, k)
                  / (specfun.pochhammer(c, k) * math.factorial(k))
                  for k in range(m + 1)]
        horner = 0.0
        for cf in coeffs[::-1]:
            horner = horner * x + cf
        val = specfun.hyp2f1(-m, b, c, x)
        worst = max(worst, abs(val - horner) / max(1.0, abs(horner)))
    checks.append(_check("polynomial_truncation_matches_horner", worst, 5e-15))

    # monotonicity on x for c > 0, a,b <= c: decreasing if ab <= 0 else increasing
    worst = 0.0
    grid = np.linspace(0.0, 0.99, 34)
    for _ in range(10):
        c = rng.uniform(0.5, 4.0)
        a = rng.uniform(-2.0, c)
        b = rng.uniform(-2.0, c)
        vals = np.array([specfun.hyp2f1(a, b, c, x) for x in grid])
        d = np.diff(vals)
        sign = 1.0 if a * b >= 0.0 else -1.0
        worst = max(worst, float(np.max(-sign * d, initial=0.0)))
    checks.append(_check("parameter_monotonicity", worst, 1e-12))

    # x -> 1 approach toward the closed-form summation, gaps shrinking
    worst = 0.0
    for a, b, c in ((-0.5, 0.7, 2.0), (0.3, 0.4, 2.5), (-1.5, 1.0, 3.0)):
        lim = specfun.hyp2f1_at_one(a, b, c)
        gaps = [abs(specfun.hyp2f1(a, b, c, 1.0 - 10.0 ** -k) - lim)
                for k in range(2, 7)]
        worst = max(worst, float(np.max(np.diff(gaps), initial=0.0)))
    checks.append(_check("gap_shrinkage_toward_x_one", worst, 0.0))

    worst = 0.0
    for _ in range(50):
        a = rng.uniform(0.2, 2.5)
        b = rng.uniform(0.2, 2.5)
        c = rng.uniform(0.1, a + b - 0.1)
        if c <= 0.1:
            c = 0.1
        x = rng.uniform(0.0, 0.9)
        lhs = specfun.euler_transform(a, b, c, x)
        rhs = specfun.hyp2f1(a, b, c, x)
        worst = max(worst, abs(lhs - rhs) / max(1.0, abs(rhs)))
    checks.append(_check("euler_transform_consistency", worst, 1e-10))

    worst = max(abs(specfun.gamma_fn(0.5) - 1.7724538509055160273),
                abs(specfun.gamma_fn(1.0) - 1.0),
                abs(specfun.gamma_fn(3.0) - 2.0),
                abs(specfun.beta_fn(0.75, 0.25) - 4.442882938158366247) / 4.44,
                abs(specfun.beta_fn(2, 3) - 1.0 / 12.0))
    checks.append(_check("gamma_beta_anchors", worst, 1e-13))

    # ratio of series with monotone coefficient ratio is monotone
    num = np.array([0.0, 1.0, 2.0, 3.0, 4.0])
    den = np.array([1.0, 1.0, 1.0, 1.0, 1.0])
    vals = [specfun.ratio_of_series(num, den, x) for x in np.linspace(0.05, 0.9, 18)]
    worst = float(np.max(-np.diff(vals), initial=0.0))
    checks.append(_check("series_ratio_monotonicity", worst, 0.0))
    return checks


# ---------------------------------------------------------------------------
# kernel suite


def _kernel_checks(rng) -> list:
    checks = []
    alphas = (-0.5, 0.0, 0.5, 2.0, 5.0)

    worst = 0.0
    for a in alphas:
        r = rng.uniform(0.0, 0.95, 40)
        th = rng.uniform(0.0, TWO_PI, 40)
        vals = kernel.kernel_eval(a, r * np.exp(1j * th))
        worst = max(worst, float(np.max(-vals, initial=-math.inf)))
    checks.append(_check("kernel_positivity", worst, 0.0))

    worst = 0.0
    for a in alphas:
        r = rng.uniform(0.0, 0.95, 20)
        th = rng.uniform(0.0, math.pi, 20)
        z = r * np.exp(1j * th)
        diff = np.abs(kernel.kernel_eval(a, z) - kernel.kernel_eval(a, np.conj(z)))
        worst = max(worst, float(diff.max()))
    checks.append(_check("conjugate_symmetry", worst, 0.0))

    worst = -math.inf
    for a in np.linspace(-0.9, 10.0, 50):
        for r in np.linspace(0.0, 1.0, 50):
            worst = max(worst, kernel.kernel_mass(a, r) - 1.0)
    checks.append(_check("mass_bounded_by_one", worst, 1e-12))

    worst = 0.0
    t = TWO_PI * np.arange(4096) / 4096
    for a in alphas:
        for r in (0.1, 0.5, 0.9):
            quad = float(np.mean(kernel.kernel_eval(a, r * np.exp(1j * t))))
            worst = max(worst, abs(quad - kernel.kernel_mass(a, r)))
    checks.append(_check("mass_quadrature_agreement", worst, 1e-10))

    worst = 0.0
    h = 1e-4
    for a in alphas:
        for _ in range(8):
            z = rng.uniform(0.0, 0.8) * np.exp(1j * rng.uniform(0, TWO_PI))
            z = complex(z)
            stencil = (kernel.kernel_eval(a, z + h) + kernel.kernel_eval(a, z - h)
                       + kernel.kernel_eval(a, z + 1j * h)
                       + kernel.kernel_eval(a, z - 1j * h)
                       - 4.0 * kernel.kernel_eval(a, z)) / (h * h)
            exact = kernel.kernel_laplacian(a, z)
            if abs(exact) > 1e-4:
                worst = max(worst, abs(stencil - exact) / abs(exact))
            else:
                worst = max(worst, abs(stencil - exact) * 1e-4)
    checks.append(_check("laplacian_matches_finite_differences", worst, 1e-4))

    worst = 0.0
    for a in (0.5, 1.0, 3.0, 8.0, -0.2, -0.75):
        r0 = kernel.subharmonic_radius(a)
        axis = 1.0 if a > 0 else -1.0
        inside = np.linspace(1e-3, r0 * 0.999, 50)
        vals = np.asarray(kernel.kernel_laplacian(a, axis * inside))
        worst = max(worst, float(np.max(-vals, initial=0.0)))
        just_out = axis * min(r0 * 1.02, r0 + 0.01)
        worst = max(worst, float(max(0.0, kernel.kernel_laplacian(a, just_out))))
    checks.append(_check("laplacian_sign_law", worst, 1e-12))
    return checks


# ---------------------------------------------------------------------------
# solver suite


def _solver_checks(rng) -> list:
    checks = []
    alphas = (-0.5, 0.0, 0.5, 2.0, 5.0)

    worst = 0.0
    for a in alphas:
        for _ in range(3):
            spec, f = _random_trig_poly(rng, 6)
            series = solver.dirichlet_solve(a, f)
            for _ in range(4):
                z = complex(rng.uniform(0, 0.9) * np.exp(1j * rng.uniform(0, TWO_PI)))
                uq = solver.extend_quadrature(a, f, z, 4096)
                us = solver.extend_series(series, z)
                worst = max(worst, abs(uq - us))
    checks.append(_check("cross_route_agreement", worst, 1e-8))

    worst = 0.0
    for n in range(-4, 5):
        f = boundary.BoundaryFunction.from_callable(
            lambda th, n=n: np.exp(1j * n * th))
        for _ in range(3):
            z = complex(rng.uniform(0, 0.9) * np.exp(1j * rng.uniform(0, TWO_PI)))
            u = solver.extend_quadrature(0.0, f, z, 4096)
            expect = z ** n if n >= 0 else np.conj(z) ** (-n)
            worst = max(worst, abs(u - expect))
    checks.append(_check("harmonic_reduction", worst, 1e-10))

    # boundary approach at a continuity point, shrinking and small at 0.999
    worst = 0.0
    decrease_violation = 0.0
    theta0 = 0.7
    spec = boundary.FourierSpectrum.from_dict({0: 0.3, 1: 0.12, 2: 0.04})
    f = boundary.BoundaryFunction.from_spectrum(spec)
    target = complex(boundary.synthesize(spec, theta0))
    for a in (-0.5, 2.0):
        series = solver.dirichlet_solve(a, f)
        gaps = [abs(solver.extend_series(series, r * np.exp(1j * theta0)) - target)
                for r in (0.9, 0.99, 0.999)]
        worst = max(worst, gaps[-1])
        decrease_violation = max(decrease_violation,
                                 float(np.max(np.diff(gaps), initial=0.0)))
    checks.append(_check("boundary_convergence_gap_at_0p999", worst, 0.01))
    checks.append(_check("boundary_convergence_monotone", decrease_violation, 0.0))

    worst = 0.0
    for a in (-0.5, 2.0):
        spec, f = _random_trig_poly(rng, 5)
        sup = float(np.max(np.abs(boundary.sample(f, 2048))))
        for _ in range(6):
            z = complex(rng.uniform(0, 0.95) * np.exp(1j * rng.uniform(0, TWO_PI)))
            u = solver.extend_quadrature(a, f, z)
            bound = sup * kernel.kernel_mass(a, abs(z)) + 1e-8
            worst = max(worst, abs(u) - bound)
    checks.append(_check("mass_boundedness", worst, 0.0))

    worst = 0.0
    spec1, f1 = _random_trig_poly(rng, 4)
    spec2, f2 = _random_trig_poly(rng, 4)
    lam = complex(0.7, -0.3)
    f3 = boundary.BoundaryFunction.from_callable(
        lambda th: lam * boundary.synthesize(spec1, th) + boundary.synthesize(spec2, th))
    for _ in range(6):
        z = complex(rng.uniform(0, 0.9) * np.exp(1j * rng.uniform(0, TWO_PI)))
        u3 = solver.extend_quadrature(1.5, f3, z, 2048)
        u12 = (lam * solver.extend_quadrature(1.5, f1, z, 2048)
               + solver.extend_quadrature(1.5, f2, z, 2048))
        worst = max(worst, abs(u3 - u12))
    checks.append(_check("linearity", worst, 1e-12))

    worst = 0.0
    spec, f = _random_trig_poly(rng, 4)
    for a in (-0.5, 2.0):
        series = solver.dirichlet_solve(a, f)
        for _ in range(4):
            z = complex(rng.uniform(0, 0.7) * np.exp(1j * rng.uniform(0, TWO_PI)))
            worst = max(worst, solver.pde_residual(
                a, lambda w: solver.extend_series(series, w), z))
            worst = max(worst, solver.pde_residual(
                a, lambda w: solver.extend_quadrature(a, f, w, 2048), z))
    for _ in range(4):
        z = complex(rng.uniform(0, 0.7) * np.exp(1j * rng.uniform(0, TWO_PI)))
        worst = max(worst, solver.pde_residual(
            1.5, lambda w: kernel.kernel_eval(1.5, w), z))
    checks.append(_check("pde_residual", worst, 1e-5))
    return checks


# ---------------------------------------------------------------------------
# analysis suite


def _analysis_checks(rng) -> list:
    checks = []
    step = boundary.BoundaryFunction.step(0.0, 1.0, 0.0)

    # stated jump law: linear-in-angle weights (holds at alpha=0 and radially)
    worst = 0.0
    worst_local = 0.0
    for a in (0.0, 1.0):
        for gamma in (math.pi / 4, math.pi / 2):
            res = analysis.jump_probe(a, step, analysis.JumpProbeSpec(0.0, gamma))
            worst = max(worst, abs(res.extrapolated - res.predicted))
            worst_local = max(worst_local, abs(res.extrapolated - res.predicted_local))
    checks.append(_check("jump_law_weighted_average", worst, 0.02))
    checks.append(_check("jump_law_local_model", worst_local, 0.02))

    res = analysis.jump_probe(0.0, step, analysis.JumpProbeSpec(0.0, math.pi / 4))
    checks.append(_check("jump_law_harmonic_anchor",
                         abs(res.extrapolated - res.predicted), 0.005))

    worst = 0.0
    for a in (0.5, 1.0, 3.0, 8.0, -0.2, -0.75):
        lo, hi = analysis.radius_bracket(a)
        worst = max(worst, abs(0.5 * (lo + hi) - kernel.subharmonic_radius(a)))
    checks.append(_check("radius_bracket_agreement", worst, 1e-9))

    worst = 0.0
    radii = np.linspace(0.05, 0.95, 40)
    for a in (1.0, 2.0, 4.0):
        prof = lambda r, a=a: np.array(
            [specfun.hyp2f1(-a / 2, -a / 2, 1.0, rr * rr) for rr in np.atleast_1d(r)])
        lap = analysis.radial_profile_laplacian(prof, radii)
        worst = max(worst, float(np.max(-lap, initial=0.0)))
    checks.append(_check("radial_mode_subharmonicity", worst, 1e-8))

    worst = 0.0
    for a in (2.0, 4.0):
        rep = analysis.ratio_monotone_check(a, np.linspace(0.1, 0.9, 9))
        worst = max(worst, rep.max_violation)
        worst = max(worst, abs(rep.limit_at_one - a / 4.0))
    checks.append(_check("derivative_ratio_monotone", worst, 1e-9))

    worst = 0.0
    for p in (1.5, 2.0, 3.0, 8.0):
        expect = 0.5 / math.cos(math.pi / (2 * p)) ** p
        worst = max(worst, abs(analysis.riesz_fejer_constant(0.0, p) - expect))
    checks.append(_check("constant_harmonic_reduction", worst, 1e-12))

    worst = 0.0
    convexity = 0.0
    for a, p in ((0.0, 2.0), (-0.25, 2.0)):
        g0 = analysis.g_function(a, p, 0.0)
        gpi = analysis.g_function(a, p, math.pi)
        worst = max(worst, abs(g0 - gpi))
        ts = np.linspace(0.0, math.pi, 9)
        gv = np.array([analysis.g_function(a, p, t) for t in ts])
        second = gv[:-2] - 2.0 * gv[1:-1] + gv[2:]
        convexity = max(convexity, float(np.max(-second, initial=0.0)))
    checks.append(_check("g_endpoint_symmetry", worst, 1e-9))
    checks.append(_check("g_convexity", convexity, 1e-8))

    worst = 0.0
    spec = analysis.RieszFejerSpec(-0.25, 2.0)
    for _ in range(5):
        _, f = _random_trig_poly(rng, 6)
        result = analysis.riesz_fejer_check(spec, f)
        worst = max(worst, -result.margin)
    checks.append(_check("diameter_inequality_margin", worst, 1e-8))
    return checks


SUITES: dict[str, Callable] = {
    "specfun": _specfun_checks,
    "kernel": _kernel_checks,
    "solver": _solver_checks,
    "analysis": _analysis_checks,
}


def run_verify(suite: str = "all", seed: int = 0, perturb: float = 0.0) -> dict:
    """Run one suite (or all) and return the deterministic summary dict.

    ``perturb`` is added to every measured worst case before comparison;
    it exists so the harness can be shown to fail when it should.
    """
    names = list(SUITES) if suite == "all" else [suite]
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from "
                             f"{['all'] + list(SUITES)}")
    summary = {"schema_version": "1", "suite": suite, "seed": int(seed),
               "perturb": float(perturb), "suites": {}, "passed": True}
    for name in names:
        rng = np.random.default_rng(int(seed))
        checks = SUITES[name](rng)
        for c in checks:
            c["measured"] = c.pop("worst")
            c["effective"] = c["measured"] + float(perturb)
            c["passed"] = bool(c["effective"] <= c["tolerance"])
        ok = all(c["passed"] for c in checks)
        summary["suites"][name] = {"checks": checks, "passed": ok}
        summary["passed"] = summary["passed"] and ok
    return summary


def verify_json(suite: str = "all", seed: int = 0, perturb: float = 0.0) -> str:
    return canonical_json(run_verify(suite, seed, perturb))
