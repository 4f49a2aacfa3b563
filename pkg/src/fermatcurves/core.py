"""Closed-form geometry of the even-power curves x^(2N) + y^(2N) = 1.

The family interpolates between the unit circle (N = 1) and the boundary of
the square [-1, 1]^2 as N grows. Every member is star-shaped about the
origin, so a direction angle theta picks out exactly one curve point: the
unit direction vector scaled by the radial factor

    rho_N(theta) = (cos(theta)**(2*N) + sin(theta)**(2*N)) ** (-1 / (2*N)).

Summing the powers directly underflows once N is a few hundred, so all
routines here use the factored form

    rho = (1 / m) * (1 + r**(2*N)) ** (-1 / (2*N)),
    m = max(|cos|, |sin|),  r = min(|cos|, |sin|) / m,

with r**(2*N) evaluated as exp(2*N*log(r)). An underflow of that term to
zero is harmless (the factor it feeds is then exactly 1), which keeps the
evaluation stable for every exponent up to 2**31 - 1.

An affine change of coordinates (u, v) = (alpha*x + beta*y + gamma,
delta*x + epsilon*y + zeta) generalizes the family to curves satisfying
u**(2*N) + v**(2*N) = 1 in the mapped coordinates; the same radial factor
parameterizes those curves through the inverse affine map, and the inverse
map alone carries the square boundary onto the large-N limit shape.

All functions are pure: identical inputs produce bit-identical outputs, no
global state is touched, and everything is safe to call from several
threads at once.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass

from .errors import InvalidAngle, OriginPoint, SingularFrame

__all__ = [
    "AffineFrame",
    "IDENTITY",
    "MAX_EXPONENT",
    "Point2",
    "TWO_PI",
    "affine_curve_point",
    "curve_point",
    "curve_speed",
    "curve_velocity",
    "forward_affine",
    "inverse_affine",
    "limit_map",
    "normalize_angle",
    "radial_factor",
    "radial_factor_limit",
    "residual_log",
    "square_point",
    "theta_of_point",
]

TWO_PI = 2.0 * math.pi
MAX_EXPONENT = 2**31 - 1

_LN2 = math.log(2.0)
_SQRT2 = math.sqrt(2.0)
_DET_GUARD = 1e-12
_FRAME_FIELDS = ("alpha", "beta", "gamma", "delta", "epsilon", "zeta")

Point2 = tuple[float, float]


def _check_angle(theta) -> float:
    try:
        theta = float(theta)
    except (TypeError, ValueError):
        raise InvalidAngle(f"angle must be a real number, got {theta!r}") from None
    if not math.isfinite(theta):
        raise InvalidAngle(f"angle must be finite, got {theta!r}")
    return theta


def _check_exponent(n) -> int:
    if isinstance(n, bool) or not isinstance(n, numbers.Integral):
        raise TypeError(f"exponent must be an integer, got {type(n).__name__}")
    n = int(n)
    if not 1 <= n <= MAX_EXPONENT:
        raise ValueError(f"exponent must be in [1, {MAX_EXPONENT}], got {n}")
    return n


def _check_point(p) -> Point2:
    x, y = p
    x = float(x)
    y = float(y)
    if not (math.isfinite(x) and math.isfinite(y)):
        raise ValueError(f"point coordinates must be finite, got {p!r}")
    return x, y


@dataclass(frozen=True)
class AffineFrame:
    """Coefficients of the affine map (x, y) -> (alpha*x + beta*y + gamma,
    delta*x + epsilon*y + zeta).

    The defaults give the identity map. Construction rejects frames whose
    linear part is singular or close enough to singular that the inverse
    map cannot be trusted: |alpha*epsilon - beta*delta| must exceed
    1e-12 * (max(|alpha|, |beta|) + 1) * (max(|delta|, |epsilon|) + 1).
    """

    alpha: float = 1.0
    beta: float = 0.0
    gamma: float = 0.0
    delta: float = 0.0
    epsilon: float = 1.0
    zeta: float = 0.0

    def __post_init__(self):
        for name in _FRAME_FIELDS:
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, numbers.Real):
                raise TypeError(f"frame coefficient {name} must be a real number")
            object.__setattr__(self, name, float(value))
        if not all(math.isfinite(getattr(self, name)) for name in _FRAME_FIELDS):
            raise ValueError("frame coefficients must be finite")
        guard = (
            _DET_GUARD
            * (max(abs(self.alpha), abs(self.beta)) + 1.0)
            * (max(abs(self.delta), abs(self.epsilon)) + 1.0)
        )
        if abs(self.det) <= guard:
            raise SingularFrame(
                f"singular frame: |alpha*epsilon - beta*delta| = {abs(self.det):.6g}"
                f" is at or below the invertibility guard {guard:.6g}"
            )

    @property
    def det(self) -> float:
        """Determinant alpha*epsilon - beta*delta of the linear part."""
        return self.alpha * self.epsilon - self.beta * self.delta

    def coefficients(self) -> tuple[float, float, float, float, float, float]:
        """The six coefficients in (alpha, beta, gamma, delta, epsilon, zeta) order."""
        return (self.alpha, self.beta, self.gamma, self.delta, self.epsilon, self.zeta)


IDENTITY = AffineFrame()


def _identity_linear(frame: AffineFrame) -> bool:
    return (
        frame.alpha == 1.0
        and frame.beta == 0.0
        and frame.delta == 0.0
        and frame.epsilon == 1.0
    )


def normalize_angle(theta: float) -> float:
    """Map an angle in radians to the canonical range [0, 2*pi).

    The result is congruent to ``theta`` modulo 2*pi. NaN and infinities
    raise InvalidAngle.
    """
    theta = _check_angle(theta)
    r = math.fmod(theta, TWO_PI)
    if r < 0.0:
        r += TWO_PI
    if r >= TWO_PI:
        # Adding 2*pi to a tiny negative remainder can round up to 2*pi itself.
        r = 0.0
    return r


def radial_factor(theta: float, n: int) -> float:
    """Distance from the origin to the curve x^(2N) + y^(2N) = 1 along theta.

    Uses the factored log-domain form described in the module docstring, so
    the value is accurate for every admissible exponent; direct power
    summation would underflow around N = 500. The result is clamped to the
    exact mathematical range [1, 2**((N-1)/(2*N))], whose upper end is the
    value on the diagonals; without the clamp, rounding can stick out of
    the range by about one ulp.
    """
    theta = _check_angle(theta)
    n = _check_exponent(n)
    c = math.fabs(math.cos(theta))
    s = math.fabs(math.sin(theta))
    m = max(c, s)
    r = min(c, s) / m
    if r == 0.0:
        rho = 1.0 / m
    else:
        two_n = 2.0 * n
        power = math.exp(two_n * math.log(r))
        rho = math.exp(-math.log1p(power) / two_n) / m
    peak = math.exp(_LN2 * (n - 1) / (2.0 * n))
    return min(max(rho, 1.0), peak)


def radial_factor_limit(theta: float) -> float:
    """Large-N limit of radial_factor: distance to the unit-square boundary."""
    theta = _check_angle(theta)
    m = max(math.fabs(math.cos(theta)), math.fabs(math.sin(theta)))
    return min(max(1.0 / m, 1.0), _SQRT2)


def curve_point(theta: float, n: int) -> Point2:
    """Point of x^(2N) + y^(2N) = 1 in direction theta."""
    rho = radial_factor(theta, n)
    return (rho * math.cos(theta), rho * math.sin(theta))


def square_point(theta: float) -> Point2:
    """Radial projection of direction theta onto the boundary of [-1, 1]^2.

    Dividing both coordinates by the larger magnitude makes the larger
    output coordinate exactly +/-1.
    """
    theta = _check_angle(theta)
    c = math.cos(theta)
    s = math.sin(theta)
    m = max(math.fabs(c), math.fabs(s))
    return (c / m, s / m)


def forward_affine(p: Point2, frame: AffineFrame = IDENTITY) -> Point2:
    """Apply the frame's map to a point."""
    x, y = p
    return (
        frame.alpha * x + frame.beta * y + frame.gamma,
        frame.delta * x + frame.epsilon * y + frame.zeta,
    )


def inverse_affine(p: Point2, frame: AffineFrame = IDENTITY) -> Point2:
    """Apply the inverse of the frame's map to a point."""
    u, v = p
    du = u - frame.gamma
    dv = v - frame.zeta
    det = frame.det
    return (
        (frame.epsilon * du - frame.beta * dv) / det,
        (frame.alpha * dv - frame.delta * du) / det,
    )


def limit_map(p: Point2, frame: AffineFrame = IDENTITY) -> Point2:
    """Carry a point of the square boundary onto the large-N limit shape.

    The limit of the generalized curves is the inverse affine image of the
    square [-1, 1]^2 boundary, so this is exactly ``inverse_affine``.
    """
    return inverse_affine(p, frame)


def affine_curve_point(theta: float, n: int, frame: AffineFrame = IDENTITY) -> Point2:
    """Point of the generalized curve whose forward image lies along theta.

    With the identity frame this reduces bit-for-bit to ``curve_point``.
    """
    rho = radial_factor(theta, n)
    target = (rho * math.cos(theta), rho * math.sin(theta))
    return inverse_affine(target, frame)


def residual_log(p: Point2, n: int, frame: AffineFrame = IDENTITY) -> float:
    """Membership residual u^(2N) + v^(2N) - 1 for (u, v) = forward_affine(p).

    The power sum is evaluated in the log domain, so the residual stays
    meaningful at exponents where the powers themselves would underflow or
    overflow. Returns +inf when the sum overflows the double range and
    exactly -1.0 when both mapped coordinates are zero.
    """
    n = _check_exponent(n)
    p = _check_point(p)
    u, v = forward_affine(p, frame)
    au = math.fabs(u)
    av = math.fabs(v)
    if au == 0.0 and av == 0.0:
        return -1.0
    two_n = 2.0 * n
    a = two_n * math.log(au) if au > 0.0 else -math.inf
    b = two_n * math.log(av) if av > 0.0 else -math.inf
    hi = max(a, b)
    lo = min(a, b)
    lse = hi + math.log1p(math.exp(lo - hi))
    try:
        return math.expm1(lse)
    except OverflowError:
        return math.inf


def theta_of_point(p: Point2, frame: AffineFrame = IDENTITY) -> float:
    """Parameter angle of a curve point: the direction of its forward image.

    Raises OriginPoint when the forward image is (0, 0).
    """
    p = _check_point(p)
    u, v = forward_affine(p, frame)
    if u == 0.0 and v == 0.0:
        raise OriginPoint("forward image is the origin, direction undefined")
    return normalize_angle(math.atan2(v, u))


def _radial_factor_slope(theta: float, n: int) -> float:
    """d(radial_factor)/d(theta) in the same factored log-domain style.

    Derivation: with S = cos^(2N) + sin^(2N), rho = S^(-1/(2N)) and

        drho/dtheta = S^(-1/(2N) - 1) * cos(theta) * sin(theta)
                      * (cos^(2N-2) - sin^(2N-2)),

    which factors through m and r into bounded terms. Exactly zero on the
    axes and on the diagonals, and identically zero for N = 1.
    """
    c = math.cos(theta)
    s = math.sin(theta)
    ca = math.fabs(c)
    sa = math.fabs(s)
    m = max(ca, sa)
    r = min(ca, sa) / m
    k = 2.0 * n - 2.0
    if k == 0.0 or r == 0.0:
        return 0.0
    lr = math.log(r)
    low_power = math.exp(k * lr)  # r^(2N-2)
    big_power = math.exp((k + 2.0) * lr)  # r^(2N)
    shape = math.exp(-(1.0 + 0.5 / n) * math.log1p(big_power))
    slope = (c * s) / (m * m * m) * (1.0 - low_power) * shape
    return slope if ca >= sa else -slope


def curve_velocity(theta: float, n: int, frame: AffineFrame = IDENTITY) -> Point2:
    """Derivative of affine_curve_point with respect to theta."""
    theta = _check_angle(theta)
    n = _check_exponent(n)
    rho = radial_factor(theta, n)
    drho = _radial_factor_slope(theta, n)
    c = math.cos(theta)
    s = math.sin(theta)
    wu = drho * c - rho * s
    wv = drho * s + rho * c
    det = frame.det
    return (
        (frame.epsilon * wu - frame.beta * wv) / det,
        (frame.alpha * wv - frame.delta * wu) / det,
    )


def curve_speed(theta: float, n: int, frame: AffineFrame = IDENTITY) -> float:
    """Magnitude of curve_velocity, the arc-length integrand.

    For an identity linear part |velocity|^2 equals rho^2 + drho^2 exactly,
    so that form is used there; it avoids the sin^2 + cos^2 rounding noise
    and makes the N = 1 speed exactly 1.0 everywhere.
    """
    theta = _check_angle(theta)
    n = _check_exponent(n)
    if _identity_linear(frame):
        return math.hypot(radial_factor(theta, n), _radial_factor_slope(theta, n))
    vx, vy = curve_velocity(theta, n, frame)
    return math.hypot(vx, vy)
