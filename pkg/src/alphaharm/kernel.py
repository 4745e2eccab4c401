"""Poisson-type kernel of the weighted disk Laplacian.

For a weight parameter alpha > -1 the kernel is

    K(z) = c * (1 - |z|^2)^(alpha+1) / |1 - z|^(alpha+2),

with normalization c = Gamma(alpha/2 + 1)^2 / Gamma(alpha + 1).  This
module evaluates K, its circle average ("mass"), the closed-form
Laplacian identity, and the sharp radius inside which extensions of
non-negative boundary data stay subharmonic.

Evaluation loses accuracy for |1 - z| < 1e-6 where the kernel blows up;
callers should stay out of that annulus.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .specfun import hyp2f1

__all__ = [
    "AlphaParam",
    "DiskPoint",
    "c_alpha",
    "kernel_eval",
    "kernel_laplacian",
    "kernel_mass",
    "subharmonic_radius",
]


@dataclass(frozen=True)
class AlphaParam:
    """Weight parameter of the PDE family; only alpha > -1 is non-trivial."""

    alpha: float

    def __post_init__(self):
        a = float(self.alpha)
        if not math.isfinite(a) or a <= -1.0:
            raise ValueError(f"alpha must be a finite real > -1, got {self.alpha}")

    def __float__(self) -> float:
        return float(self.alpha)


def alpha_value(alpha) -> float:
    """Accept AlphaParam or a bare real, validate, return the float."""
    if isinstance(alpha, AlphaParam):
        return float(alpha)
    return float(AlphaParam(float(alpha)))


@dataclass(frozen=True)
class DiskPoint:
    """Point of the (closed) unit disk with Cartesian and polar views."""

    re: float
    im: float

    @classmethod
    def from_polar(cls, r: float, theta: float) -> "DiskPoint":
        return cls(r * math.cos(theta), r * math.sin(theta))

    @classmethod
    def from_complex(cls, z: complex) -> "DiskPoint":
        z = complex(z)
        return cls(z.real, z.imag)

    @property
    def r(self) -> float:
        return math.hypot(self.re, self.im)

    @property
    def theta(self) -> float:
        return math.atan2(self.im, self.re)

    def __complex__(self) -> complex:
        return complex(self.re, self.im)


def as_interior_points(z) -> np.ndarray:
    """Coerce to a complex array and require every point inside the disk."""
    if isinstance(z, DiskPoint):
        z = complex(z)
    arr = np.asarray(z, dtype=np.complex128)
    if arr.size and float(np.max(np.abs(arr))) >= 1.0:
        raise ValueError("kernel evaluation requires |z| < 1")
    return arr


def c_alpha(alpha) -> float:
    """Kernel normalization Gamma(alpha/2 + 1)^2 / Gamma(alpha + 1)."""
    a = alpha_value(alpha)
    # both gamma arguments are positive for a > -1; lgamma avoids overflow
    return math.exp(2.0 * math.lgamma(a / 2.0 + 1.0) - math.lgamma(a + 1.0))


def kernel_eval(alpha, z):
    """Kernel value c*(1-|z|^2)^(a+1)/|1-z|^(a+2) at interior points.

    Accepts a complex scalar, a DiskPoint, or a complex ndarray and
    broadcasts.  Values are strictly positive.
    """
    a = alpha_value(alpha)
    arr = as_interior_points(z)
    w = 1.0 - np.abs(arr) ** 2
    m = np.abs(1.0 - arr)
    out = c_alpha(a) * w ** (a + 1.0) / m ** (a + 2.0)
    if np.isscalar(z) or isinstance(z, (complex, float, int, DiskPoint)):
        return float(out)
    return out


def kernel_mass(alpha, r: float) -> float:
    """Circle average of the kernel at radius r in [0, 1].

    Equals c_alpha * F(-a/2, -a/2; 1; r^2); increases to 1 at r = 1.
    """
    a = alpha_value(alpha)
    r = float(r)
    if not 0.0 <= r <= 1.0:
        raise ValueError(f"kernel mass radius must lie in [0, 1], got {r}")
    return c_alpha(a) * hyp2f1(-a / 2.0, -a / 2.0, 1.0, r * r)


def kernel_laplacian(alpha, z):
    """Laplacian of the kernel from the closed-form first-order identity.

    The kernel is annihilated by the weighted operator, which rearranges
    into

        (1-r^2) Lap K = alpha (alpha + 4(alpha+1) r^2/(1-r^2)
                               - 2(alpha+2) Re(z/(1-z))) K,

    verified against the five-point finite-difference Laplacian (e.g.
    Lap K(0) = alpha^2 c_alpha).  Vanishes identically at alpha = 0
    (classical harmonic kernel).
    """
    a = alpha_value(alpha)
    arr = as_interior_points(z)
    r2 = np.abs(arr) ** 2
    bracket = a * (a + 4.0 * (a + 1.0) * r2 / (1.0 - r2)
                   - 2.0 * (a + 2.0) * (arr / (1.0 - arr)).real)
    out = bracket * kernel_eval(a, arr) / (1.0 - r2)
    if np.isscalar(z) or isinstance(z, (complex, float, int, DiskPoint)):
        return float(out)
    return out


def subharmonic_radius(alpha) -> float:
    """Sharp radius of guaranteed subharmonicity for non-negative data.

    The two signed branches agree with |sqrt(1+a) - 1|/(sqrt(1+a) + 1)
    but are kept explicit.
    """
    a = alpha_value(alpha)
    if a == 0.0:
        return 1.0
    s = math.sqrt(1.0 + a)
    if a > 0.0:
        return (s - 1.0) / (s + 1.0)
    return (1.0 - s) / (s + 1.0)
