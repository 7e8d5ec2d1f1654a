"""Truncated formal power series and the series solutions of the decay ODE.

Series come in two coordinates: the raw variable x, and the deformed
coordinate u = arcsinh(k x)/k in which the decay equation becomes classical.
Picard iterates are exact polynomials in u, so they are built there with
rational arithmetic and only converted to floats at the boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import Kappa, to_kappa_number
from .errors import DomainError

__all__ = [
    "PowerSeries",
    "PicardIterate",
    "MAX_ORDER",
    "series_multiply",
    "series_compose",
    "series_truncate",
    "exp_kappa_taylor",
    "ln_kappa_shifted_taylor",
    "sqrt_weight_series",
    "decay_series_solution",
    "picard_iterate",
    "picard_series_in_x",
    "evaluate_series",
]

MAX_ORDER = 64


@dataclass(frozen=True)
class PowerSeries:
    """Truncated series sum_j c_j * v^j in the variable tag ("x" or "u")."""

    variable: str
    coefficients: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.variable not in ("x", "u"):
            raise DomainError(f"unknown series variable {self.variable!r}")
        coeffs = tuple(float(c) for c in self.coefficients)
        if not coeffs or not all(math.isfinite(c) for c in coeffs):
            raise DomainError("coefficients must be a nonempty finite list")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1


@dataclass(frozen=True)
class PicardIterate:
    """Iterate n of the successive-approximation scheme, as a polynomial in
    u = arcsinh(k x)/k.  Coefficient of u^j is (-1)^j/j! for j <= n."""

    n: int
    coefficients: tuple[float, ...]


def _check_order(order: int) -> None:
    if not (0 <= order <= MAX_ORDER):
        raise DomainError(f"series order must be in [0, {MAX_ORDER}], got {order!r}")


def series_truncate(c: Sequence[float], order: int) -> list[float]:
    """Pad or cut a coefficient list to exactly order+1 entries."""
    out = list(c[: order + 1])
    out += [0.0] * (order + 1 - len(out))
    return out


def series_multiply(a: Sequence[float], b: Sequence[float], order: int) -> list[float]:
    """Cauchy product truncated at the given order."""
    out = [0.0] * (order + 1)
    for i, ai in enumerate(a[: order + 1]):
        if ai == 0.0:
            continue
        for j, bj in enumerate(b[: order + 1 - i]):
            out[i + j] += ai * bj
    return out


def series_compose(outer: Sequence[float], inner: Sequence[float], order: int) -> list[float]:
    """Composition outer(inner(v)) truncated at the given order.

    The inner series must have zero constant term, otherwise truncation
    would not commute with composition.
    """
    inner = series_truncate(inner, order)
    if inner[0] != 0.0:
        raise DomainError("series_compose needs inner constant term 0")
    # Horner over polynomials: result = outer[n]; result = result*inner + outer[j]
    out = [0.0] * (order + 1)
    for cj in reversed(list(outer[: order + 1])):
        out = series_multiply(out, inner, order)
        out[0] += cj
    return out


def _coordinate_series(k: Kappa, order: int) -> list[float]:
    # Maclaurin coefficients of u(x) = arcsinh(k x)/k: only odd powers,
    # c_{2n+1} = (-1)^n (2n)! k^(2n) / (4^n (n!)^2 (2n+1)).
    c = [0.0] * (order + 1)
    if order >= 1:
        c[1] = 1.0
    term = 1.0
    k2 = k.value * k.value
    for n in range(1, (order - 1) // 2 + 1):
        term *= -k2 * (2 * n - 1) ** 2 / (2 * n * (2 * n + 1))
        c[2 * n + 1] = term
    return c


def _exp_series(order: int) -> list[float]:
    c = [0.0] * (order + 1)
    c[0] = 1.0
    for j in range(1, order + 1):
        c[j] = c[j - 1] / j
    return c


def exp_kappa_taylor(k: Kappa, order: int) -> PowerSeries:
    """Maclaurin coefficients of the deformed exponential about 0.

    Built by composing the classical exp series with the coordinate series
    u(x); the first few coefficients are 1, 1, 1/2, (1-k^2)/3!,
    (1-4k^2)/4!, (1-k^2)(1-9k^2)/5!.
    """
    _check_order(order)
    coeffs = series_compose(_exp_series(order), _coordinate_series(k, order), order)
    return PowerSeries("x", tuple(coeffs))


def ln_kappa_shifted_taylor(k: Kappa, order: int) -> PowerSeries:
    """Maclaurin coefficients of ln_k(1+x) about x = 0.

    Built by composing sinh(k t)/k with the classical ln(1+x) series.
    """
    _check_order(order)
    # sinh(k t)/k in t: odd coefficients k^(2n)/(2n+1)!
    sinh_ratio = [0.0] * (order + 1)
    if order >= 1:
        sinh_ratio[1] = 1.0
    term = 1.0
    k2 = k.value * k.value
    for n in range(1, (order - 1) // 2 + 1):
        term *= k2 / (2 * n * (2 * n + 1))
        sinh_ratio[2 * n + 1] = term
    log1p = [0.0] + [(-1.0) ** (j + 1) / j for j in range(1, order + 1)]
    coeffs = series_compose(sinh_ratio, log1p, order)
    return PowerSeries("x", tuple(coeffs))


def sqrt_weight_series(k: Kappa, order: int) -> PowerSeries:
    """Binomial series of sqrt(1 + k^2 x^2); only even powers are nonzero."""
    _check_order(order)
    c = [0.0] * (order + 1)
    c[0] = 1.0
    term = 1.0
    k2 = k.value * k.value
    for m in range(1, order // 2 + 1):
        term *= k2 * (0.5 - (m - 1)) / m  # C(1/2, m) ratio
        c[2 * m] = term
    return PowerSeries("x", tuple(c))


def decay_series_solution(k: Kappa, order: int) -> PowerSeries:
    """Series solution of the deformed decay equation with f(0) = 1.

    Coefficients follow the recurrence obtained by equating powers of x in
    sqrt(1+k^2 x^2) f'(x) = -f(x) with the square root expanded binomially:
        (p+1) a_{p+1} = -a_p - sum_{m>=1} C(1/2, m) k^(2m) (p-2m+1) a_{p-2m+1}.
    The result coincides with the Maclaurin series of exp_k(-x).
    """
    _check_order(order)
    w = sqrt_weight_series(k, order).coefficients
    a = [0.0] * (order + 1)
    a[0] = 1.0
    for p in range(order):
        total = -a[p]
        for m in range(1, p // 2 + 1):
            j = p - 2 * m + 1
            total -= w[2 * m] * j * a[j]
        a[p + 1] = total / (p + 1)
    return PowerSeries("x", tuple(a))


def picard_iterate(k: Kappa, n: int) -> PicardIterate:
    """Iterate n of Picard's scheme for the decay equation, in u-coordinate.

    In u the equation is classical (df/du = -f, f = 1 at u = 0), so each
    iterate is the polynomial 1 - integral of the previous one, computed
    exactly over rationals: f_{m+1}(u) = 1 - int_0^u f_m(t) dt.
    """
    if not (0 <= n <= 20):
        raise DomainError(f"picard index must be in [0, 20], got {n!r}")
    coeffs = [Fraction(1)]
    for _ in range(n):
        integrated = [Fraction(0)] + [c / (j + 1) for j, c in enumerate(coeffs)]
        coeffs = [-c for c in integrated]
        coeffs[0] += 1
    return PicardIterate(n, tuple(float(c) for c in coeffs))


def picard_series_in_x(k: Kappa, n: int, order: int | None = None) -> PowerSeries:
    """Maclaurin expansion in x of a Picard iterate (compose with u(x))."""
    if order is None:
        order = n
    _check_order(order)
    it = picard_iterate(k, n)
    coeffs = series_compose(it.coefficients, _coordinate_series(k, order), order)
    return PowerSeries("x", tuple(coeffs))


def evaluate_series(s: PowerSeries | PicardIterate, k: Kappa, x: float) -> float:
    """Horner evaluation; series in the u-coordinate map x -> u first."""
    if not math.isfinite(x):
        raise DomainError(f"evaluate_series needs finite x, got {x!r}")
    if isinstance(s, PicardIterate) or s.variable == "u":
        t = to_kappa_number(k, x)
    else:
        t = x
    acc = 0.0
    for c in reversed(s.coefficients):
        acc = acc * t + c
    return acc
