"""Error tables, empirical convergence orders, and figure-data reports.

Everything is measured against the closed-form solutions, so the reports
quantify what the solver comparison plots only show qualitatively.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Kappa, kappa_exp
from .errors import DomainError, FloorError
from .ode import ab2_solve, euler_solve, rk4_solve
from .series import decay_series_solution, evaluate_series, picard_iterate, picard_series_in_x

__all__ = [
    "ErrorReport",
    "ConvergenceReport",
    "SeriesErrorCurve",
    "PicardSeriesReport",
    "SOLVERS",
    "ROUNDOFF_FLOOR",
    "error_table",
    "convergence_order",
    "series_error_curve",
    "asymptote_check",
    "picard_vs_series",
]

SOLVERS = {"euler": euler_solve, "ab2": ab2_solve, "rk4": rk4_solve}

# Below this max error a step-size ladder measures rounding noise, not
# truncation, so fitted orders would be garbage.
ROUNDOFF_FLOOR = 1e-13


@dataclass(frozen=True)
class ErrorReport:
    method: str
    h: float
    xs: tuple[float, ...]
    abs_errors: tuple[float, ...]
    max_error: float
    rms_error: float


@dataclass(frozen=True)
class ConvergenceReport:
    method: str
    step_sizes: tuple[float, ...]
    max_errors: tuple[float, ...]
    fitted_orders: tuple[float, ...]  # log2 ratio per adjacent ladder pair
    hit_floor: bool


@dataclass(frozen=True)
class SeriesErrorCurve:
    kappa: float
    orders: tuple[int, ...]
    xs: tuple[float, ...]
    abs_errors: dict[int, tuple[float, ...]]


@dataclass(frozen=True)
class PicardSeriesReport:
    n: int
    max_coefficient_diff: float
    xs: tuple[float, ...]
    pointwise_diffs: tuple[float, ...]


def _single_report(p, method: str, h: float) -> ErrorReport:
    trace = SOLVERS[method](p, h)
    errors = tuple(abs(f - p.exact(x)) for x, f in zip(trace.xs, trace.fs))
    rms = math.sqrt(sum(e * e for e in errors) / len(errors))
    return ErrorReport(method, h, trace.xs, errors, max(errors), rms)


def error_table(p, methods, h: float) -> list[ErrorReport]:
    """Per-method absolute errors against the closed form on the trace grid,
    assembled in sorted method order for determinism."""
    unknown = set(methods) - set(SOLVERS)
    if unknown:
        raise DomainError(f"unknown methods: {sorted(unknown)}")
    if not methods:
        raise DomainError("need at least one method")
    return [_single_report(p, m, h) for m in sorted(set(methods))]


def convergence_order(p, method: str, h0: float, levels: int,
                      floor: float = ROUNDOFF_FLOOR) -> ConvergenceReport:
    """Fit empirical orders from a halving step-size ladder h0, h0/2, ...

    The ladder stops early once the max error drops below the round-off
    floor, returning a partial fit; FloorError is raised only when fewer
    than two levels complete so no order can be fitted at all.
    """
    if method not in SOLVERS:
        raise DomainError(f"unknown method {method!r}")
    if not (3 <= levels <= 8):
        raise DomainError(f"levels must be in [3, 8], got {levels!r}")
    hs: list[float] = []
    errs: list[float] = []
    hit_floor = False
    for i in range(levels):
        h = h0 / 2**i
        err = _single_report(p, method, h).max_error
        hs.append(h)
        errs.append(err)
        if err < floor:
            hit_floor = True
            break
    if len(errs) < 2:
        raise FloorError(
            f"{method}: error {errs[0]:.3e} already below floor {floor:.1e} at h0")
    orders = tuple(math.log2(errs[i] / errs[i + 1]) for i in range(len(errs) - 1))
    return ConvergenceReport(method, tuple(hs), tuple(errs), orders, hit_floor)


def series_error_curve(k: Kappa, orders, x_grid) -> SeriesErrorCurve:
    """|truncated decay series - exp_k(-x)| per order on the grid."""
    orders = tuple(int(n) for n in orders)
    if not orders:
        raise DomainError("need at least one order")
    xs = tuple(float(x) for x in x_grid)
    curves: dict[int, tuple[float, ...]] = {}
    for n in orders:
        s = decay_series_solution(k, n)
        curves[n] = tuple(
            abs(evaluate_series(s, k, x) - kappa_exp(k, -x)) for x in xs)
    return SeriesErrorCurve(k.value, orders, xs, curves)


def asymptote_check(k: Kappa, x: float) -> float:
    """Tail ratio exp_k(-x) * (2|k|x)^(1/|k|); tends to 1 as x -> inf."""
    if k.is_classical:
        raise DomainError("asymptote_check needs kappa != 0")
    if not (math.isfinite(x) and x > 0.0):
        raise DomainError(f"x must be positive, got {x!r}")
    kk = abs(k.value)
    return kappa_exp(k, -x) * (2.0 * kk * x) ** (1.0 / kk)


def picard_vs_series(k: Kappa, n: int, x_grid) -> PicardSeriesReport:
    """Compare Picard iterate n against the series solution: coefficientwise
    (both expanded in x through order n) and pointwise on the grid."""
    if not (0 <= n <= 20):
        raise DomainError(f"n must be in [0, 20], got {n!r}")
    px = picard_series_in_x(k, n).coefficients
    sx = decay_series_solution(k, n).coefficients
    coeff_diff = max(abs(a - b) for a, b in zip(px, sx))
    it = picard_iterate(k, n)
    s = decay_series_solution(k, n)
    xs = tuple(float(x) for x in x_grid)
    diffs = tuple(
        abs(evaluate_series(it, k, x) - evaluate_series(s, k, x)) for x in xs)
    return PicardSeriesReport(n, coeff_diff, xs, diffs)
