"""Brute-force reference solvers, independent of the closed-form radial factor.

These exist to check the rest of the package: the bisection solver finds the
radial factor numerically from the defining equation alone, and the implicit
solver recovers one coordinate from the other. Neither touches
``radial_factor``, so agreement between the two routes is a real test rather
than a tautology.
"""

from __future__ import annotations

import math

from . import core
from .core import IDENTITY, TWO_PI, AffineFrame
from .errors import OutOfRange
from .sampling import SampledCurve

__all__ = ["BRACKET_TOL", "bisect_radial_factor", "implicit_solve_x", "oracle_polyline"]

BRACKET_TOL = 1e-14

_MAX_BISECT_ITER = 200
_SQRT2 = math.sqrt(2.0)


def bisect_radial_factor(theta: float, n: int) -> float:
    """Solve (t*cos(theta))^(2N) + (t*sin(theta))^(2N) = 1 for t by bisection.

    The left side is monotone in t and evaluated in the log domain, so the
    bracket (0, sqrt(2)] is valid for every admissible exponent. Bisection
    runs until the bracket is 1e-14 wide. Exceeding the iteration cap is an
    internal defect and raises RuntimeError.
    """
    theta = core._check_angle(theta)
    n = core._check_exponent(n)
    c = math.fabs(math.cos(theta))
    s = math.fabs(math.sin(theta))
    log_c = math.log(c) if c > 0.0 else -math.inf
    log_s = math.log(s) if s > 0.0 else -math.inf
    two_n = 2.0 * n

    lo = 0.0
    hi = _SQRT2
    for _ in range(_MAX_BISECT_ITER):
        if hi - lo <= BRACKET_TOL:
            return 0.5 * (lo + hi)
        mid = 0.5 * (lo + hi)
        log_mid = math.log(mid)
        lhs = _logaddexp(two_n * (log_mid + log_c), two_n * (log_mid + log_s))
        if lhs > 0.0:
            hi = mid
        else:
            lo = mid
    raise RuntimeError(
        f"bisection failed to shrink the bracket below {BRACKET_TOL} "
        f"within {_MAX_BISECT_ITER} iterations"
    )


def _logaddexp(a: float, b: float) -> float:
    if a == -math.inf:
        return b
    if b == -math.inf:
        return a
    hi = max(a, b)
    return hi + math.log1p(math.exp(min(a, b) - hi))


def implicit_solve_x(y: float, n: int) -> float:
    """Nonnegative x with x^(2N) + y^(2N) = 1, solved in the log domain.

    Raises OutOfRange when |y| > 1. The complement 1 - y^(2N) is formed with
    expm1 so no precision is lost when |y| is close to 1.
    """
    n = core._check_exponent(n)
    y = float(y)
    if not math.isfinite(y):
        raise OutOfRange(f"y must be finite, got {y!r}")
    ay = math.fabs(y)
    if ay > 1.0:
        raise OutOfRange(f"no real solution: |y| = {ay!r} exceeds 1")
    if ay == 0.0:
        return 1.0
    u = 2.0 * n * math.log(ay)
    if u == 0.0:
        return 0.0
    complement = -math.expm1(u)  # 1 - y^(2N), accurate near y = +/-1
    if complement == 0.0:
        return 0.0
    return math.exp(math.log(complement) / (2.0 * n))


def oracle_polyline(
    n: int, frame: AffineFrame = IDENTITY, count: int = 256
) -> SampledCurve:
    """Sample one full turn using only the bisection solver.

    Same uniform theta grid as ``sampling.sample_uniform_theta`` but with the
    radial factor found by ``bisect_radial_factor``, giving an independent
    polyline to compare the closed form against.
    """
    n = core._check_exponent(n)
    count = int(count)
    thetas = tuple((TWO_PI * k) / count for k in range(count))
    points = []
    for t in thetas:
        radius = bisect_radial_factor(t, n)
        target = (radius * math.cos(t), radius * math.sin(t))
        points.append(core.inverse_affine(target, frame))
    return SampledCurve(thetas, tuple(points), True, n, frame)
