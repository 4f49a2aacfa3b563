"""Sampling, arc length, and convergence diagnostics for the curve family.

Arc length is computed with adaptive Simpson quadrature. The integrand (the
parameterization speed) is analytic away from the axis and diagonal angles
theta = k*pi/4; at large N it develops near-kinks on the diagonals, so every
integral is split at those angles first and the adaptive recursion only ever
sees smooth pieces.
"""

from __future__ import annotations

import bisect as _bisect
import math
from dataclasses import dataclass

import numpy as np

from . import core
from .core import IDENTITY, TWO_PI, AffineFrame, Point2
from .errors import QuadratureFailure, TooFewSamples

__all__ = [
    "ARC_ROOT_TOL",
    "DEFAULT_TOL",
    "RESIDUAL_TOL",
    "SampledCurve",
    "arc_length",
    "convergence_gap",
    "polyline_hausdorff",
    "resample_by_arclength",
    "sample_uniform_theta",
]

DEFAULT_TOL = 1e-10
RESIDUAL_TOL = 1e-9
ARC_ROOT_TOL = 1e-10

_MAX_DEPTH = 60
_MIN_TOL = 1e-14
_RESAMPLE_BASE = 4096
_QUARTER_PI = math.pi / 4.0
_SPAN_SLACK = 4.0 * math.ulp(TWO_PI)


@dataclass(frozen=True)
class SampledCurve:
    """Ordered polyline approximation of one curve, tagged with its parameters.

    ``thetas`` and ``points`` are parallel tuples; ``closed`` says whether the
    last sample connects back to the first. Construction validates the
    invariants: at least three samples, strictly increasing thetas within one
    period, and every point on the curve to within a membership residual of
    1e-9.
    """

    thetas: tuple[float, ...]
    points: tuple[Point2, ...]
    closed: bool
    exponent: int
    frame: AffineFrame

    def __post_init__(self):
        object.__setattr__(self, "thetas", tuple(float(t) for t in self.thetas))
        object.__setattr__(
            self, "points", tuple((float(x), float(y)) for x, y in self.points)
        )
        object.__setattr__(self, "closed", bool(self.closed))
        object.__setattr__(self, "exponent", core._check_exponent(self.exponent))
        if not isinstance(self.frame, AffineFrame):
            raise TypeError("frame must be an AffineFrame")
        if len(self.thetas) != len(self.points):
            raise ValueError(
                f"thetas and points lengths differ: {len(self.thetas)} != {len(self.points)}"
            )
        if len(self.thetas) < 3:
            raise TooFewSamples(f"need at least 3 samples, got {len(self.thetas)}")
        if self.thetas[0] < 0.0 or self.thetas[-1] > TWO_PI:
            raise ValueError("thetas must lie within one period [0, 2*pi)")
        for a, b in zip(self.thetas, self.thetas[1:]):
            if not a < b:
                raise ValueError("thetas must be strictly increasing")
        for t, p in zip(self.thetas, self.points):
            res = core.residual_log(p, self.exponent, self.frame)
            if not abs(res) <= RESIDUAL_TOL:
                raise ValueError(
                    f"point {p!r} at theta={t!r} is off the curve: residual {res:.3e}"
                )

    def __len__(self) -> int:
        return len(self.points)


def sample_uniform_theta(
    n: int, frame: AffineFrame = IDENTITY, count: int = 256
) -> SampledCurve:
    """Sample one full turn of the curve on the uniform theta grid 2*pi*k/count."""
    n = core._check_exponent(n)
    count = _check_count(count)
    thetas = tuple((TWO_PI * k) / count for k in range(count))
    points = tuple(core.affine_curve_point(t, n, frame) for t in thetas)
    return SampledCurve(thetas, points, True, n, frame)


def _check_count(count) -> int:
    count = int(count)
    if count < 3:
        raise TooFewSamples(f"need at least 3 samples, got {count}")
    return count


def _check_tol(tol) -> float:
    # Below ~1e-14 relative error the Simpson estimate is plain rounding
    # noise and the recursion subdivides forever instead of failing fast.
    tol = float(tol)
    if not tol >= _MIN_TOL:
        raise ValueError(f"tol must be at least {_MIN_TOL:g}, got {tol!r}")
    return tol


def arc_length(
    n: int,
    frame: AffineFrame = IDENTITY,
    theta_a: float = 0.0,
    theta_b: float = TWO_PI,
    tol: float = DEFAULT_TOL,
) -> float:
    """Arc length of the curve between parameter angles theta_a and theta_b.

    The span theta_b - theta_a must lie in [0, 2*pi]; a zero span returns
    exactly 0.0 and the full span covers one closed circuit. Raises
    QuadratureFailure if the tolerance cannot be met within the recursion
    depth limit.
    """
    n = core._check_exponent(n)
    theta_a = core._check_angle(theta_a)
    theta_b = core._check_angle(theta_b)
    tol = _check_tol(tol)
    span = theta_b - theta_a
    if span < 0.0 or span > TWO_PI + _SPAN_SLACK:
        raise ValueError(
            f"theta span must lie in [0, 2*pi], got {span!r} from ({theta_a!r}, {theta_b!r})"
        )
    if span == 0.0:
        return 0.0
    span = min(span, TWO_PI)
    a = core.normalize_angle(theta_a)
    b = a + span

    def speed(t: float) -> float:
        return core.curve_speed(t, n, frame)

    total = 0.0
    for lo, hi in _split_at_kinks(a, b):
        total += _adaptive_simpson(speed, lo, hi, tol)
    return total


def _split_at_kinks(a: float, b: float) -> list[tuple[float, float]]:
    """Cut [a, b] at every multiple of pi/4 strictly inside it."""
    cuts = [a]
    k = math.floor(a / _QUARTER_PI) + 1
    while True:
        x = k * _QUARTER_PI
        if x >= b:
            break
        if x > a:
            cuts.append(x)
        k += 1
    cuts.append(b)
    return list(zip(cuts, cuts[1:]))


def _adaptive_simpson(f, a: float, b: float, tol: float) -> float:
    fa = f(a)
    fm = f(0.5 * (a + b))
    fb = f(b)
    whole = (b - a) * ((fa + 4.0 * fm + fb) / 6.0)
    return _refine(f, a, b, fa, fm, fb, whole, tol, 0)


def _refine(f, a, b, fa, fm, fb, whole, tol, depth):
    m = 0.5 * (a + b)
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm = f(lm)
    frm = f(rm)
    left = (m - a) * ((fa + 4.0 * flm + fm) / 6.0)
    right = (b - m) * ((fm + 4.0 * frm + fb) / 6.0)
    refined = left + right
    err = (refined - whole) / 15.0
    if abs(err) <= tol * (1.0 + abs(refined)):
        return refined + err
    if depth >= _MAX_DEPTH:
        raise QuadratureFailure(
            f"error target not met on [{a!r}, {b!r}] after depth {_MAX_DEPTH}"
        )
    half = 0.5 * tol
    return _refine(f, a, m, fa, flm, fm, left, half, depth + 1) + _refine(
        f, m, b, fm, frm, fb, right, half, depth + 1
    )


def resample_by_arclength(
    n: int,
    frame: AffineFrame = IDENTITY,
    count: int = 256,
    tol: float = DEFAULT_TOL,
) -> SampledCurve:
    """Sample one full turn at ``count`` equal arc-length steps.

    A cumulative arc-length table on a 4096-node theta grid brackets each
    target; bracketed bisection then refines every sample until its
    cumulative arc length is within 1e-10 of the target.
    """
    n = core._check_exponent(n)
    count = _check_count(count)
    tol = _check_tol(tol)

    grid = [(TWO_PI * k) / _RESAMPLE_BASE for k in range(_RESAMPLE_BASE + 1)]
    cum = [0.0] * (_RESAMPLE_BASE + 1)
    for k in range(1, _RESAMPLE_BASE + 1):
        cum[k] = cum[k - 1] + arc_length(n, frame, grid[k - 1], grid[k], tol)
    total = cum[-1]

    thetas = [0.0]
    step = total / count
    for j in range(1, count):
        target = step * j
        i = _bisect.bisect_right(cum, target) - 1
        i = min(max(i, 0), _RESAMPLE_BASE - 1)
        thetas.append(_invert_arclength(n, frame, grid[i], cum[i], grid[i + 1], target, tol))
    points = tuple(core.affine_curve_point(t, n, frame) for t in thetas)
    return SampledCurve(tuple(thetas), points, True, n, frame)


def _invert_arclength(n, frame, cell_start, cell_cum, cell_end, target, tol):
    """Bisect inside one table cell for the theta whose cumulative arc is target."""
    lo = cell_start
    hi = cell_end
    mid = 0.5 * (lo + hi)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        gap = cell_cum + arc_length(n, frame, cell_start, mid, tol) - target
        if abs(gap) <= ARC_ROOT_TOL or hi - lo <= math.ulp(hi):
            return mid
        if gap > 0.0:
            hi = mid
        else:
            lo = mid
    return mid


def convergence_gap(
    n: int, frame: AffineFrame = IDENTITY, resolution: int = 4096
) -> float:
    """Largest distance between the degree-2N curve and its limit shape.

    Measured over a uniform theta grid between affine_curve_point and the
    limit-mapped square point of the same angle. For the identity frame this
    is the largest radial gap to the square.
    """
    n = core._check_exponent(n)
    resolution = int(resolution)
    if resolution < 16:
        raise ValueError(f"resolution must be at least 16, got {resolution}")
    worst = 0.0
    for k in range(resolution):
        t = (TWO_PI * k) / resolution
        px, py = core.affine_curve_point(t, n, frame)
        qx, qy = core.limit_map(core.square_point(t), frame)
        worst = max(worst, math.hypot(px - qx, py - qy))
    return worst


def polyline_hausdorff(a, b) -> float:
    """Symmetric Hausdorff distance between two polylines.

    Each direction measures every vertex of one polyline against the segments
    of the other; closed polylines include the wrap-around segment. Accepts
    SampledCurve instances or plain sequences of (x, y) pairs (plain
    sequences are treated as closed).
    """
    pa, ca = _as_polyline(a)
    pb, cb = _as_polyline(b)
    return max(_directed_hausdorff(pa, pb, cb), _directed_hausdorff(pb, pa, ca))


def _as_polyline(curve) -> tuple[np.ndarray, bool]:
    if isinstance(curve, SampledCurve):
        pts = np.asarray(curve.points, dtype=float)
        closed = curve.closed
    else:
        pts = np.asarray(curve, dtype=float)
        closed = True
    if pts.ndim != 2 or pts.shape[1] != 2 or pts.shape[0] < 2:
        raise ValueError("polyline needs at least two (x, y) vertices")
    if not np.all(np.isfinite(pts)):
        raise ValueError("polyline vertices must be finite")
    return pts, closed


def _directed_hausdorff(pts: np.ndarray, poly: np.ndarray, poly_closed: bool) -> float:
    if poly_closed:
        starts = poly
        ends = np.roll(poly, -1, axis=0)
    else:
        starts = poly[:-1]
        ends = poly[1:]
    d = ends - starts
    seg_len2 = np.einsum("ij,ij->i", d, d)
    safe_len2 = np.where(seg_len2 > 0.0, seg_len2, 1.0)

    worst = 0.0
    for lo in range(0, pts.shape[0], 256):
        chunk = pts[lo : lo + 256]
        w = chunk[:, None, :] - starts[None, :, :]
        t = np.einsum("pij,ij->pi", w, d) / safe_len2
        np.clip(t, 0.0, 1.0, out=t)
        diff = w - t[:, :, None] * d[None, :, :]
        dist2 = np.einsum("pij,pij->pi", diff, diff).min(axis=1)
        worst = max(worst, float(dist2.max()))
    return math.sqrt(worst)
