"""Numerical toolkit for alpha-harmonic functions on the unit disk.

Evaluates the Poisson-type kernel of the weighted disk Laplacian,
solves the associated Dirichlet problem by quadrature and by series,
probes boundary behavior at continuity and jump points, locates the
sharp subharmonicity radius, and checks the diameter-vs-circle integral
inequality with its sharp constant.
"""

from .analysis import (JumpProbeResult, JumpProbeSpec, RatioMonotoneReport,
                       RieszFejerResult, RieszFejerSpec, ScanReport,
                       g_function, jump_probe, radial_profile_laplacian,
                       radius_bracket, ratio_monotone_check,
                       riesz_fejer_check, riesz_fejer_constant,
                       subharmonic_scan)
from .boundary import BoundaryFunction, FourierSpectrum, analyze, sample, synthesize
from .kernel import (AlphaParam, DiskPoint, c_alpha, kernel_eval,
                     kernel_laplacian, kernel_mass, subharmonic_radius)
from .solver import (AlphaHarmonicSeries, coefficient_map, dirichlet_solve,
                     evaluate_grid, extend_quadrature, extend_series,
                     extend_series_ring, harmonic_companion, pde_residual)
from .specfun import (AccuracyError, Hyp2F1Params, SeriesReport, beta_fn,
                      euler_transform, gamma_fn, hyp2f1, hyp2f1_at_one,
                      hyp2f1_derivative, hyp2f1_report, pochhammer,
                      ratio_of_series)

__version__ = "0.1.0"

__all__ = [
    "AccuracyError", "AlphaHarmonicSeries", "AlphaParam", "BoundaryFunction",
    "DiskPoint", "FourierSpectrum", "Hyp2F1Params", "JumpProbeResult",
    "JumpProbeSpec", "RatioMonotoneReport", "RieszFejerResult",
    "RieszFejerSpec", "ScanReport", "SeriesReport", "analyze", "beta_fn",
    "c_alpha", "coefficient_map", "dirichlet_solve", "euler_transform",
    "evaluate_grid", "extend_quadrature", "extend_series",
    "extend_series_ring", "g_function", "gamma_fn", "harmonic_companion",
    "hyp2f1", "hyp2f1_at_one", "hyp2f1_derivative", "hyp2f1_report",
    "jump_probe", "kernel_eval", "kernel_laplacian", "kernel_mass",
    "pde_residual", "pochhammer", "radial_profile_laplacian",
    "radius_bracket", "ratio_monotone_check", "ratio_of_series",
    "riesz_fejer_check", "riesz_fejer_constant", "sample",
    "subharmonic_radius", "subharmonic_scan", "synthesize",
]
