"""Deformed decay and logistic problems with analytic and numerical solvers.

The decay equation sqrt(1 + k^2 b^2 x^2) f'(x) + b f(x) = 0 (rate b > 0,
f(0) = f0) has the closed form f0 * exp_k(-b x).  Three analytic routes are
implemented (closed form, quadrature of the weight, coordinate substitution)
plus fixed-step Euler, two-step Adams-Bashforth, and classical RK4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Kappa, adaptive_simpson, kappa_exp, scaled_arcsinh
from .errors import DomainError

__all__ = [
    "DecayProblem",
    "LogisticProblem",
    "SolutionTrace",
    "closed_form_decay",
    "quadrature_decay",
    "substitution_decay",
    "residual_decay",
    "slope_field",
    "euler_solve",
    "ab2_solve",
    "rk4_solve",
    "analytic_trace",
    "logistic_closed_form",
    "logistic_residual",
]


@dataclass(frozen=True)
class DecayProblem:
    """Decay equation data: rhs G(x, f) = -beta * f / sqrt(1 + k^2 beta^2 x^2).

    beta = 1 recovers the plain deformed decay equation; the general weight
    carries beta inside the square root so the closed form stays exp_k(-beta x).
    """

    k: Kappa
    beta: float = 1.0
    f0: float = 1.0
    x_max: float = 5.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.beta) and self.beta > 0.0):
            raise DomainError(f"beta must be positive, got {self.beta!r}")
        if not (math.isfinite(self.x_max) and self.x_max > 0.0):
            raise DomainError(f"x_max must be positive, got {self.x_max!r}")
        if not math.isfinite(self.f0):
            raise DomainError(f"f0 must be finite, got {self.f0!r}")

    @property
    def x_start(self) -> float:
        return 0.0

    @property
    def x_end(self) -> float:
        return self.x_max

    @property
    def initial_value(self) -> float:
        return self.f0

    def weight(self, x: float) -> float:
        return 1.0 / math.hypot(1.0, self.k.value * self.beta * x)

    def rhs(self, x: float, f: float) -> float:
        return -self.beta * f * self.weight(x)

    def exact(self, x: float) -> float:
        return closed_form_decay(self, x)


@dataclass(frozen=True)
class LogisticProblem:
    """Logistic equation sqrt(1 + k^2 x^2) f' = f (1 - f) on [-x_max, x_max].

    f0 is the value at x = 0; the displayed closed form 1/(1 + exp_k(-x))
    corresponds to the default f0 = 1/2.
    """

    k: Kappa
    f0: float = 0.5
    x_max: float = 5.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.f0) and 0.0 < self.f0 < 1.0):
            raise DomainError(f"f0 must lie in (0, 1), got {self.f0!r}")
        if not (math.isfinite(self.x_max) and self.x_max > 0.0):
            raise DomainError(f"x_max must be positive, got {self.x_max!r}")

    @property
    def x_start(self) -> float:
        return -self.x_max

    @property
    def x_end(self) -> float:
        return self.x_max

    @property
    def initial_value(self) -> float:
        # Numerical traces start on the closed form at the left edge so the
        # comparison over the symmetric range is well-posed.
        return logistic_closed_form(self, -self.x_max)

    def weight(self, x: float) -> float:
        return 1.0 / math.hypot(1.0, self.k.value * x)

    def rhs(self, x: float, f: float) -> float:
        return f * (1.0 - f) * self.weight(x)

    def exact(self, x: float) -> float:
        return logistic_closed_form(self, x)


@dataclass(frozen=True)
class SolutionTrace:
    """One solver run: uniformly spaced samples starting at the problem's
    initial point."""

    method: str
    h: float
    xs: tuple[float, ...]
    fs: tuple[float, ...]

    @property
    def samples(self) -> list[tuple[float, float]]:
        return list(zip(self.xs, self.fs))


def closed_form_decay(p: DecayProblem, x: float) -> float:
    """f0 * exp_k(-beta x)."""
    return p.f0 * kappa_exp(p.k, -p.beta * x)


def quadrature_decay(p: DecayProblem, x: float, tol: float = 1e-12) -> float:
    """Separable route: f0 * exp(-int_0^x beta / sqrt(1+k^2 b^2 t^2) dt),
    with the integral done by adaptive quadrature."""
    if not (0.0 <= x <= p.x_max):
        raise DomainError(f"x must lie in [0, {p.x_max}], got {x!r}")
    integral = adaptive_simpson(lambda t: p.beta * p.weight(t), 0.0, x, tol)
    return p.f0 * math.exp(-integral)


def substitution_decay(p: DecayProblem, x: float) -> float:
    """Coordinate route: solve f(u) = f0 exp(-u) in the deformed coordinate
    u = arcsinh(k b x)/(k b), then scale back."""
    if not (0.0 <= x <= p.x_max):
        raise DomainError(f"x must lie in [0, {p.x_max}], got {x!r}")
    u = scaled_arcsinh(p.k.value * p.beta, x)
    return p.f0 * math.exp(-p.beta * u)


def residual_decay(p: DecayProblem, f_val: float, dfdx: float, x: float) -> float:
    """Direct-substitution check: sqrt(1+k^2 b^2 x^2) * f' + beta * f.

    Zero exactly when (f_val, dfdx) satisfies the equation at x.
    """
    return dfdx / p.weight(x) + p.beta * f_val


def slope_field(p, x_grid, f_grid) -> list[tuple[float, float, float]]:
    """Tangent slopes G(x, f) on the product grid, row-major: the outer loop
    runs over x_grid, the inner over f_grid."""
    xs = list(x_grid)
    fs = list(f_grid)
    if not xs or not fs:
        raise DomainError("slope_field needs nonempty grids")
    return [(x, f, p.rhs(x, f)) for x in xs for f in fs]


def _grid(p, h: float, min_steps: int = 1) -> list[float]:
    span = p.x_end - p.x_start
    if not (math.isfinite(h) and h > 0.0 and h <= span / min_steps):
        raise DomainError(f"step size {h!r} invalid for span {span!r}")
    n = int(math.floor(span / h + 1e-9))
    return [p.x_start + i * h for i in range(n + 1)]


def _rk4_step(p, x: float, f: float, h: float) -> float:
    k1 = p.rhs(x, f)
    k2 = p.rhs(x + 0.5 * h, f + 0.5 * h * k1)
    k3 = p.rhs(x + 0.5 * h, f + 0.5 * h * k2)
    k4 = p.rhs(x + h, f + h * k3)
    return f + h * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0


def euler_solve(p, h: float) -> SolutionTrace:
    """Forward Euler: f_{n+1} = f_n + h G(x_n, f_n)."""
    xs = _grid(p, h)
    fs = [p.initial_value]
    for x in xs[:-1]:
        fs.append(fs[-1] + h * p.rhs(x, fs[-1]))
    return SolutionTrace("euler", h, tuple(xs), tuple(fs))


def ab2_solve(p, h: float) -> SolutionTrace:
    """Explicit two-step Adams-Bashforth, bootstrapped with one RK4 step:
    f_{n+1} = f_n + h (3 G_n - G_{n-1}) / 2."""
    xs = _grid(p, h, min_steps=2)
    fs = [p.initial_value]
    g_prev = p.rhs(xs[0], fs[0])
    fs.append(_rk4_step(p, xs[0], fs[0], h))
    for x in xs[1:-1]:
        g = p.rhs(x, fs[-1])
        fs.append(fs[-1] + h * (3.0 * g - g_prev) / 2.0)
        g_prev = g
    return SolutionTrace("ab2", h, tuple(xs), tuple(fs))


def rk4_solve(p, h: float) -> SolutionTrace:
    """Classical four-stage fourth-order Runge-Kutta."""
    xs = _grid(p, h)
    fs = [p.initial_value]
    for x in xs[:-1]:
        fs.append(_rk4_step(p, x, fs[-1], h))
    return SolutionTrace("rk4", h, tuple(xs), tuple(fs))


def analytic_trace(p, h: float) -> SolutionTrace:
    """Closed-form solution sampled on the same grid the steppers use."""
    xs = _grid(p, h)
    return SolutionTrace("analytic", h, tuple(xs), tuple(p.exact(x) for x in xs))


def logistic_closed_form(lp: LogisticProblem, x: float) -> float:
    """1/(1 + c * exp_k(-x)) with c = (1 - f0)/f0; the default f0 = 1/2
    gives the plain 1/(1 + exp_k(-x))."""
    if not math.isfinite(x):
        raise DomainError(f"x must be finite, got {x!r}")
    c = (1.0 - lp.f0) / lp.f0
    return 1.0 / (1.0 + c * kappa_exp(lp.k, -x))


def logistic_residual(lp: LogisticProblem, x: float) -> float:
    """sqrt(1+k^2 x^2) f'(x) - f(x)(1 - f(x)) on the closed form, with the
    derivative taken analytically (quotient rule)."""
    c = (1.0 - lp.f0) / lp.f0
    e = c * kappa_exp(lp.k, -x)
    w = lp.weight(x)
    f = 1.0 / (1.0 + e)
    dfdx = w * e / (1.0 + e) ** 2  # d/dx exp_k(-x) = -w * exp_k(-x)
    return dfdx / w - f * (1.0 - f)
