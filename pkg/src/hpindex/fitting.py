"""Least-squares fits for the scaling laws between citation indices.

Two models are supported:

* power law ``y = a / x**b``, fitted by ordinary least squares on
  ``(ln x, ln y)``; residual statistics are reported in log space.
* proportional law ``y = s * x``, fitted through the origin; ``r_squared``
  is the uncentered ``1 - SS_res / sum(y**2)`` because the centered form can
  go negative without an intercept.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import DomainError, FitError

POWER = "power"
PROPORTIONAL = "proportional"


@dataclass(frozen=True)
class FitResult:
    model: str
    n_points: int
    rms_residual: float
    r_squared: float
    a: Optional[float] = None
    b: Optional[float] = None
    s: Optional[float] = None

    def predict(self, x):
        x = np.asarray(x, dtype=float)
        if self.model == POWER:
            return self.a / x**self.b
        return self.s * x


def _as_arrays(points) -> tuple[np.ndarray, np.ndarray]:
    pts = [(float(x), float(y)) for x, y in points]
    if not pts:
        return np.empty(0), np.empty(0)
    arr = np.array(pts, dtype=float)
    return arr[:, 0], arr[:, 1]


def fit_power_law(points: Iterable[Sequence]) -> FitResult:
    x, y = _as_arrays(points)
    if len(x) < 2:
        raise FitError("power-law fit needs at least 2 points")
    if np.any(x <= 0) or np.any(y <= 0):
        raise FitError("power-law fit needs strictly positive coordinates")
    lx, ly = np.log(x), np.log(y)
    dx = lx - lx.mean()
    sxx = float(dx @ dx)
    if sxx == 0.0:
        raise FitError("power-law fit needs at least two distinct x values")
    slope = float(dx @ (ly - ly.mean())) / sxx
    intercept = float(ly.mean() - slope * lx.mean())
    return _power_result(lx, ly, math.exp(intercept), -slope)


def score_power_law(points: Iterable[Sequence], a: float = 1.0, b: float = 0.5) -> FitResult:
    """Residual statistics of a fixed power law ``y = a / x**b`` (no fitting)."""
    x, y = _as_arrays(points)
    if len(x) < 1:
        raise FitError("no points to score")
    if np.any(x <= 0) or np.any(y <= 0):
        raise FitError("power-law scoring needs strictly positive coordinates")
    return _power_result(np.log(x), np.log(y), float(a), float(b))


def _power_result(lx, ly, a, b) -> FitResult:
    resid = ly - (math.log(a) - b * lx)
    ss_res = float(resid @ resid)
    centered = ly - ly.mean()
    ss_tot = float(centered @ centered)
    return FitResult(
        model=POWER,
        n_points=len(lx),
        rms_residual=math.sqrt(ss_res / len(lx)),
        r_squared=_r2(ss_res, ss_tot),
        a=a,
        b=b,
    )


def fit_proportional(points: Iterable[Sequence]) -> FitResult:
    x, y = _as_arrays(points)
    if len(x) < 1:
        raise FitError("proportional fit needs at least 1 point")
    if np.any(x < 0) or np.any(y < 0):
        raise FitError("proportional fit needs non-negative coordinates")
    scale = float(x.max())
    if scale == 0.0:
        raise FitError("proportional fit needs at least one x > 0")
    # scaled so that x·x cannot underflow for tiny x
    xs = x / scale
    s = float(xs @ y) / float(xs @ xs) / scale
    resid = y - s * x
    ss_res = float(resid @ resid)
    return FitResult(
        model=PROPORTIONAL,
        n_points=len(x),
        rms_residual=math.sqrt(ss_res / len(x)),
        r_squared=_r2(ss_res, float(y @ y)),
        s=s,
    )


def _r2(ss_res: float, ss_tot: float) -> float:
    if ss_tot == 0.0:
        # constant data reproduced exactly (up to rounding)
        return 1.0
    return 1.0 - ss_res / ss_tot


def hirsch_a(c_tot, h: int) -> float:
    """Hirsch's proportionality constant ``C_tot / h**2``."""
    if h < 1:
        raise DomainError(f"h must be >= 1, got {h}")
    return float(Fraction(c_tot) / (h * h))


def hirsch_a_histogram(values: Iterable[float], bin_width: float) -> list[tuple[float, int]]:
    """Counts per left-closed bin ``[k*w, (k+1)*w)``; empty bins are omitted."""
    if bin_width <= 0:
        raise DomainError(f"bin_width must be positive, got {bin_width}")
    counts = Counter(math.floor(v / bin_width) for v in values)
    return [(k * bin_width, counts[k]) for k in sorted(counts)]
