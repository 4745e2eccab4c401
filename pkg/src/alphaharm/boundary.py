"""Boundary data on the unit circle in three interchangeable forms.

A BoundaryFunction is an ordered set of half-open angular arcs, each
carrying a continuous closed-form value function; jump points live at
arc endpoints and one-sided limits are queried from the closed forms,
never from samples.  Uniform samples and truncated two-sided Fourier
spectra convert back and forth through ``sample`` / ``analyze`` /
``synthesize``.

Declarative JSON descriptions (see ``BoundaryFunction.from_json``) list
pieces as {"theta_start": ..., "theta_end": ..., "kind": "const" |
"trig_poly" | "expr", "payload": ...}.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

__all__ = [
    "BoundaryFunction",
    "FourierSpectrum",
    "analyze",
    "sample",
    "synthesize",
]

TWO_PI = 2.0 * math.pi

#: one-sided limits closer than this are not a jump
_JUMP_TOL = 1e-12


@dataclass(frozen=True)
class FourierSpectrum:
    """Two-sided coefficient sequence a_n, |n| <= N, stored densely.

    ``coeffs[N + n]`` holds a_n.  Real-valued boundary data satisfies
    a_{-n} = conj(a_n).
    """

    coeffs: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.coeffs, dtype=np.complex128)
        if arr.ndim != 1 or arr.size % 2 != 1:
            raise ValueError("spectrum must be a 1-d array of odd length")
        object.__setattr__(self, "coeffs", arr)

    @property
    def max_index(self) -> int:
        return (self.coeffs.size - 1) // 2

    def coeff(self, n: int) -> complex:
        if abs(n) > self.max_index:
            return 0.0 + 0.0j
        return complex(self.coeffs[self.max_index + n])

    @classmethod
    def from_dict(cls, entries: dict, max_index: int | None = None) -> "FourierSpectrum":
        """Build from a {n: coefficient} mapping."""
        if not entries and max_index is None:
            max_index = 0
        if max_index is None:
            max_index = max(abs(int(n)) for n in entries)
        coeffs = np.zeros(2 * max_index + 1, dtype=np.complex128)
        for n, v in entries.items():
            coeffs[max_index + int(n)] = v
        return cls(coeffs)

    def indices(self) -> np.ndarray:
        return np.arange(-self.max_index, self.max_index + 1)


def synthesize(spectrum: FourierSpectrum, theta):
    """Evaluate the finite sum of a_n e^{i n theta} at theta (scalar or array)."""
    th = np.asarray(theta, dtype=np.float64)
    n = spectrum.indices()
    vals = np.exp(1j * np.multiply.outer(th, n)) @ spectrum.coeffs
    if np.isscalar(theta) or isinstance(theta, (float, int)):
        return complex(vals)
    return vals


def _normalize_angle(theta: float) -> float:
    t = math.fmod(float(theta), TWO_PI)
    return t + TWO_PI if t < 0.0 else t


@dataclass(frozen=True)
class _Piece:
    theta_start: float
    theta_end: float  # half-open [start, end), 0 <= start < end <= 2*pi
    fn: Callable[[np.ndarray], np.ndarray]


class BoundaryFunction:
    """Piecewise-continuous complex-valued function on the unit circle.

    Arcs partition [0, 2*pi); each arc owns its left endpoint
    (right-continuous convention), and one-sided limits at every arc
    endpoint come from the adjacent closed forms.
    """

    def __init__(self, pieces: Sequence[tuple[float, float, Callable]],
                 jump_points: Sequence[float] | None = None,
                 description: dict | None = None):
        norm = []
        for start, end, fn in pieces:
            start, end = float(start), float(end)
            if not end > start:
                raise ValueError("arc must have positive length")
            norm.append((start, end, fn))
        norm.sort(key=lambda p: p[0])
        if abs(norm[0][0]) > 1e-15 or abs(norm[-1][1] - TWO_PI) > 1e-12:
            raise ValueError("arcs must partition [0, 2*pi)")
        for (s0, e0, _), (s1, _, _) in zip(norm, norm[1:]):
            if abs(e0 - s1) > 1e-12:
                raise ValueError(f"arcs must abut, gap at {e0} vs {s1}")
        self._pieces = [_Piece(s, e, fn) for s, e, fn in norm]
        self._starts = np.array([p.theta_start for p in self._pieces])
        self.description = description
        if jump_points is None:
            self.jump_points = self._detect_jumps()
        else:
            endpoints = {round(p.theta_start, 12) for p in self._pieces}
            for t in jump_points:
                if round(_normalize_angle(t), 12) not in endpoints:
                    raise ValueError(f"declared jump {t} is not an arc endpoint")
            self.jump_points = tuple(sorted(_normalize_angle(t) for t in jump_points))

    def _detect_jumps(self) -> tuple[float, ...]:
        jumps = []
        for p in self._pieces:
            t = p.theta_start
            hi = self.limit_above(t)
            lo = self.limit_below(t)
            scale = max(1.0, abs(hi), abs(lo))
            if abs(hi - lo) > _JUMP_TOL * scale:
                jumps.append(t)
        return tuple(jumps)

    def _owner(self, t: float) -> _Piece:
        idx = int(np.searchsorted(self._starts, t, side="right")) - 1
        return self._pieces[max(idx, 0)]

    def __call__(self, theta):
        """Evaluate at theta (radians, scalar or array), right-continuous."""
        th = np.asarray(theta, dtype=np.float64)
        tmod = np.mod(th, TWO_PI)
        out = np.empty(tmod.shape, dtype=np.complex128)
        idx = np.searchsorted(self._starts, tmod, side="right") - 1
        idx = np.maximum(idx, 0)
        for k, piece in enumerate(self._pieces):
            mask = idx == k
            if np.any(mask):
                out[mask] = piece.fn(tmod[mask])
        if np.isscalar(theta) or isinstance(theta, (float, int)):
            return complex(out)
        return out

    def limit_above(self, theta0: float) -> complex:
        """One-sided limit as theta -> theta0 from above (owning arc)."""
        t = _normalize_angle(theta0)
        piece = self._owner(t)
        return complex(np.asarray(piece.fn(np.array([t])))[0])

    def limit_below(self, theta0: float) -> complex:
        """One-sided limit as theta -> theta0 from below (previous arc)."""
        t = _normalize_angle(theta0)
        idx = int(np.searchsorted(self._starts, t, side="right")) - 1
        if abs(t - self._pieces[max(idx, 0)].theta_start) < 1e-15:
            prev = self._pieces[idx - 1] if idx > 0 else self._pieces[-1]
            tt = prev.theta_end if idx > 0 else TWO_PI
            return complex(np.asarray(prev.fn(np.array([tt])))[0])
        piece = self._pieces[max(idx, 0)]
        return complex(np.asarray(piece.fn(np.array([t])))[0])

    # -- constructors -------------------------------------------------

    @classmethod
    def from_callable(cls, fn: Callable) -> "BoundaryFunction":
        """Wrap a continuous 2*pi-periodic closed form fn(theta)."""
        def vec(th):
            return np.asarray(fn(th), dtype=np.complex128)
        return cls([(0.0, TWO_PI, vec)])

    @classmethod
    def constant(cls, value: complex) -> "BoundaryFunction":
        v = complex(value)
        return cls([(0.0, TWO_PI, lambda th: np.full(np.shape(th), v,
                                                     dtype=np.complex128))])

    @classmethod
    def from_spectrum(cls, spectrum: FourierSpectrum) -> "BoundaryFunction":
        return cls.from_callable(lambda th: synthesize(spectrum, np.asarray(th)))

    @classmethod
    def step(cls, theta0: float, upper: complex, lower: complex) -> "BoundaryFunction":
        """Step datum: ``upper`` on (theta0, theta0 + pi), ``lower`` beyond.

        Jump points sit at theta0 and theta0 + pi.
        """
        t0 = _normalize_angle(theta0)
        t1 = _normalize_angle(theta0 + math.pi)
        up = complex(upper)
        lo = complex(lower)

        def const(v):
            return lambda th: np.full(np.shape(th), v, dtype=np.complex128)

        cuts = sorted({0.0, t0, t1, TWO_PI})
        pieces = []
        for s, e in zip(cuts, cuts[1:]):
            if e - s <= 1e-15:
                continue
            mid = 0.5 * (s + e)
            # on the upper arc iff mid - t0 mod 2*pi lies in (0, pi)
            rel = math.fmod(mid - t0 + TWO_PI, TWO_PI)
            pieces.append((s, e, const(up if 0.0 < rel < math.pi else lo)))
        return cls(pieces)

    # -- declarative JSON ingestion ------------------------------------

    @classmethod
    def from_json(cls, doc) -> "BoundaryFunction":
        """Build from a JSON document (text or parsed dict).

        Schema: {"pieces": [{"theta_start": s, "theta_end": e,
        "kind": "const" | "trig_poly" | "expr", "payload": ...}, ...]}.
        const payload: number or [re, im]; trig_poly payload: list of
        [n, re, im] entries; expr payload: expression string in theta
        (numpy functions sin/cos/exp/sqrt/abs and pi are in scope).
        """
        if isinstance(doc, (str, bytes)):
            doc = json.loads(doc)
        if not isinstance(doc, dict) or "pieces" not in doc:
            raise ValueError("boundary description must be an object with 'pieces'")
        pieces = []
        for entry in doc["pieces"]:
            kind = entry["kind"]
            payload = entry["payload"]
            if kind == "const":
                if isinstance(payload, (list, tuple)):
                    v = complex(float(payload[0]), float(payload[1]))
                else:
                    v = complex(float(payload), 0.0)
                fn = _const_fn(v)
            elif kind == "trig_poly":
                terms = [(int(n), complex(float(re), float(im)))
                         for n, re, im in payload]
                fn = _trig_poly_fn(terms)
            elif kind == "expr":
                fn = _expr_fn(str(payload))
            else:
                raise ValueError(f"unknown boundary piece kind {kind!r}")
            pieces.append((float(entry["theta_start"]), float(entry["theta_end"]), fn))
        return cls(pieces, description=doc)

    def to_json(self) -> str:
        """Echo the parsed declarative description, canonically serialized.

        Only available for instances built via ``from_json``.
        """
        if self.description is None:
            raise ValueError("no declarative description attached")
        return json.dumps(self.description, sort_keys=True, separators=(",", ":"))


def _const_fn(v: complex):
    return lambda th: np.full(np.shape(th), v, dtype=np.complex128)


def _trig_poly_fn(terms):
    def fn(th):
        th = np.asarray(th, dtype=np.float64)
        out = np.zeros(th.shape, dtype=np.complex128)
        for n, cval in terms:
            out += cval * np.exp(1j * n * th)
        return out
    return fn


_EXPR_GLOBALS = {
    "__builtins__": {},
    "sin": np.sin, "cos": np.cos, "tan": np.tan, "exp": np.exp,
    "sqrt": np.sqrt, "abs": np.abs, "pi": math.pi, "e": math.e,
}


def _expr_fn(expr: str):
    code = compile(expr, "<boundary expr>", "eval")

    def fn(th):
        th = np.asarray(th, dtype=np.float64)
        val = eval(code, _EXPR_GLOBALS, {"theta": th})
        return np.asarray(val, dtype=np.complex128) * np.ones(th.shape)
    return fn


def sample(f: BoundaryFunction, n_samples: int) -> np.ndarray:
    """Uniform samples f(e^{2*pi*i*k/n}), k = 0..n-1.

    A sample landing on a jump takes the value of the arc owning the
    half-open endpoint.
    """
    n = int(n_samples)
    if n < 4:
        raise ValueError("need at least 4 samples")
    theta = TWO_PI * np.arange(n) / n
    return np.asarray(f(theta), dtype=np.complex128)


def analyze(samples, max_index: int | None = None) -> FourierSpectrum:
    """Two-sided discrete Fourier coefficients of uniform samples.

    a_n = (1/n) sum_k s_k e^{-2*pi*i*k*n/n} for |n| <= N with
    N = floor(n/2) - 1 by default.  The plain quadratic-cost sum is the
    defining computation; no FFT is involved.
    """
    s = np.asarray(samples, dtype=np.complex128)
    n = s.size
    if max_index is None:
        max_index = n // 2 - 1
    max_index = int(max_index)
    if n < 2 * max_index + 2:
        raise ValueError(
            f"{n} samples cannot resolve coefficients up to index {max_index}")
    k = np.arange(n)
    idx = np.arange(-max_index, max_index + 1)
    basis = np.exp(-2j * math.pi * np.multiply.outer(idx, k) / n)
    return FourierSpectrum(basis @ s / n)
