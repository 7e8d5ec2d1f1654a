"""Kaniadakis kappa-deformed special functions, algebra, and calculus.

The deformed exponential exp_k(x) = (sqrt(1+k^2 x^2) + k x)^(1/k) and its
inverse logarithm ln_k(x) = (x^k - x^(-k))/(2k) interpolate between the
classical exp/ln (k -> 0) and power-law tails (|x| -> inf).  Everything here
is a pure function of its arguments; k = 0 is handled as an exact special
case rather than by small-k division.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import ConvergenceError, DomainError

__all__ = [
    "Kappa",
    "make_kappa",
    "kappa_exp",
    "kappa_ln",
    "kappa_sum",
    "kappa_product",
    "kappa_product_identity",
    "to_kappa_number",
    "from_kappa_number",
    "differential_weight",
    "kappa_integral",
    "scaled_arcsinh",
    "adaptive_simpson",
]


@dataclass(frozen=True)
class Kappa:
    """Deformation parameter, restricted to the open interval (-1, 1)."""

    value: float

    def __post_init__(self) -> None:
        v = self.value
        if not math.isfinite(v) or abs(v) >= 1.0:
            raise DomainError(f"kappa out of range: need |kappa| < 1, got {v!r}")
        object.__setattr__(self, "value", float(v))

    @property
    def is_classical(self) -> bool:
        return self.value == 0.0


def make_kappa(value: float) -> Kappa:
    return Kappa(value)


# Odd Maclaurin coefficients of arcsinh(z)/z: 1 - z^2/6 + 3 z^4/40 - ...
def _arcsinh_ratio_series(z: float) -> float:
    z2 = z * z
    term = 1.0
    total = 1.0
    n = 0
    while True:
        n += 1
        term *= -z2 * (2 * n - 1) ** 2 / (2 * n * (2 * n + 1))
        if total + term == total:
            return total
        total += term


def scaled_arcsinh(c: float, x: float) -> float:
    """arcsinh(c*x)/c, continuously extended to x at c = 0.

    For 0 < |c| < 1e-4 with |c*x| < 0.5 the odd series of arcsinh(z)/z is
    used so the small-parameter division loses no precision.
    """
    if c == 0.0:
        return x
    z = c * x
    if abs(c) < 1e-4 and abs(z) < 0.5:
        return x * _arcsinh_ratio_series(z)
    return math.asinh(z) / c


def _scaled_sinh(c: float, x: float) -> float:
    # sinh(c*x)/c, extended to x at c = 0; sinh is cancellation-free, but the
    # series keeps subnormal c out of the division.
    if c == 0.0:
        return x
    z = c * x
    if abs(z) < 1e-4:
        z2 = z * z
        return x * (1.0 + z2 / 6.0 * (1.0 + z2 / 20.0))
    return math.sinh(z) / c


def kappa_exp(k: Kappa, x: float) -> float:
    """Deformed exponential, evaluated as exp(arcsinh(k*x)/k).

    The exponent form avoids the catastrophic cancellation the direct power
    form suffers for large negative k*x.  Overflow for extreme positive x is
    reported as +inf rather than raised.
    """
    if not math.isfinite(x):
        raise DomainError(f"kappa_exp needs finite x, got {x!r}")
    if k.is_classical:
        u = x
    else:
        u = scaled_arcsinh(k.value, x)
    try:
        return math.exp(u)
    except OverflowError:
        return math.inf


def kappa_ln(k: Kappa, x: float) -> float:
    """Deformed logarithm, inverse of kappa_exp; requires x > 0.

    Computed as sinh(k*ln x)/k, which equals (x^k - x^(-k))/(2k) but is
    stable near x = 1.
    """
    if not (math.isfinite(x) and x > 0.0):
        raise DomainError(f"kappa_ln needs x > 0, got {x!r}")
    lx = math.log(x)
    if k.is_classical:
        return lx
    return _scaled_sinh(k.value, lx)


def kappa_sum(k: Kappa, x: float, y: float) -> float:
    """Group operation x (+) y = x*sqrt(1+k^2 y^2) + y*sqrt(1+k^2 x^2)."""
    kv = k.value
    return x * math.hypot(1.0, kv * y) + y * math.hypot(1.0, kv * x)


def kappa_product(k: Kappa, x: float, y: float, classical_limit: bool = False) -> float:
    """Group operation x (x) y = (1/k) sinh((1/k) arcsinh(k x) arcsinh(k y)).

    The inner 1/k makes the identity element sinh(k)/k and the k -> 0 limit
    the ordinary product.  The sinh form is 0/0 at k = 0; pass
    classical_limit=True to get x*y there instead of a DomainError.
    """
    if k.is_classical:
        if classical_limit:
            return x * y
        raise DomainError("kappa_product undefined at kappa = 0; "
                          "pass classical_limit=True for x*y")
    kv = k.value
    return math.sinh(math.asinh(kv * x) * math.asinh(kv * y) / kv) / kv


def kappa_product_identity(k: Kappa) -> float:
    """Identity element of the deformed product: sinh(k)/k (1 at k = 0)."""
    return _scaled_sinh(k.value, 1.0)


def to_kappa_number(k: Kappa, x: float) -> float:
    """Coordinate map x -> arcsinh(k x)/k; identity at k = 0."""
    return scaled_arcsinh(k.value, x)


def from_kappa_number(k: Kappa, u: float) -> float:
    """Inverse coordinate map u -> sinh(k u)/k; identity at k = 0."""
    return _scaled_sinh(k.value, u)


def differential_weight(k: Kappa, x: float) -> float:
    """Jacobian of the coordinate map: 1/sqrt(1 + k^2 x^2), in (0, 1]."""
    return 1.0 / math.hypot(1.0, k.value * x)


def adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 1e-12,
    max_evals: int = 1_000_000,
) -> float:
    """Adaptive Simpson quadrature of f over [a, b] to absolute error tol.

    Raises ConvergenceError if the refinement budget is exhausted.
    """
    if not (math.isfinite(a) and math.isfinite(b) and a <= b):
        raise DomainError(f"bad interval [{a!r}, {b!r}]")
    if not tol > 0.0:
        raise DomainError(f"tol must be positive, got {tol!r}")
    if a == b:
        return 0.0

    evals = [0]

    def ev(x: float) -> float:
        evals[0] += 1
        if evals[0] > max_evals:
            raise ConvergenceError(
                f"quadrature budget of {max_evals} evaluations exhausted")
        return f(x)

    def simpson(fa: float, fm: float, fb: float, h: float) -> float:
        return h * (fa + 4.0 * fm + fb) / 6.0

    def recurse(lo, hi, flo, fmid, fhi, whole, eps):
        mid = 0.5 * (lo + hi)
        lmid = 0.5 * (lo + mid)
        rmid = 0.5 * (mid + hi)
        flm = ev(lmid)
        frm = ev(rmid)
        left = simpson(flo, flm, fmid, mid - lo)
        right = simpson(fmid, frm, fhi, hi - mid)
        delta = left + right - whole
        if abs(delta) <= 15.0 * eps:
            return left + right + delta / 15.0
        half = 0.5 * eps
        return (recurse(lo, mid, flo, flm, fmid, left, half)
                + recurse(mid, hi, fmid, frm, fhi, right, half))

    fa, fm, fb = ev(a), ev(0.5 * (a + b)), ev(b)
    whole = simpson(fa, fm, fb, b - a)
    return recurse(a, b, fa, fm, fb, whole, tol)


def kappa_integral(
    k: Kappa,
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 1e-12,
) -> float:
    """Deformed integral of f over [a, b]: the integrand is weighted by
    1/sqrt(1 + k^2 x^2)."""
    return adaptive_simpson(lambda x: f(x) * differential_weight(k, x), a, b, tol)
