"""Command-line interface: evaluation, solving, series, and figure data.

Data formats are plain CSV (one header row, comma delimiter, '.' decimal
point) and UTF-8 JSON with snake_case keys.  Numbers are printed with 17
significant digits so doubles round-trip, and files are written atomically
(temp file then rename).  Output is fully deterministic: no timestamps.

Exit codes: 0 success, 2 usage or domain error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile
from pathlib import Path

from .core import (
    Kappa,
    differential_weight,
    kappa_exp,
    kappa_ln,
    kappa_product,
    kappa_sum,
    to_kappa_number,
)
from .errors import ConvergenceError, DomainError, FloorError
from .harness import SOLVERS, error_table
from .ode import DecayProblem, LogisticProblem, analytic_trace
from .series import (
    decay_series_solution,
    exp_kappa_taylor,
    ln_kappa_shifted_taylor,
    picard_iterate,
)

__all__ = ["main", "entrypoint"]


def _fmt(v: float) -> str:
    return format(float(v), ".17g")


def _resolve(path: str) -> Path:
    out = Path(path)
    base = os.environ.get("KAPPA_OUT_DIR")
    if base and not out.is_absolute():
        out = Path(base) / out
    return out


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    target = _resolve(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=target.name + ".")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _csv(header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(v if isinstance(v, str) else _fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="kappamath",
        description="Deformed exponential mathematics and decay-equation toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p, output=True):
        p.add_argument("--kappa", type=float, default=0.9,
                       help="deformation parameter, |kappa| < 1 (default 0.9)")
        if output:
            p.add_argument("--format", choices=("csv", "json"), default="csv")
            p.add_argument("--output", default=None,
                           help="output file (default: stdout); relative paths "
                            "resolve against $KAPPA_OUT_DIR when set")

    pe = sub.add_parser("eval", help="evaluate a deformed function")
    pe.add_argument("--fn", required=True,
                    choices=("exp", "ln", "sum", "product", "weight", "knum"))
    pe.add_argument("--kappa", type=float, required=True)
    pe.add_argument("--x", type=float, required=True)
    pe.add_argument("--y", type=float, default=None)

    ps = sub.add_parser("solve", help="solve the decay or logistic problem")
    add_common(ps)
    ps.add_argument("--problem", choices=("decay", "logistic"), default="decay")
    ps.add_argument("--method", default="analytic",
                    choices=("analytic", "euler", "ab2", "rk4"))
    ps.add_argument("--beta", type=float, default=1.0)
    ps.add_argument("--f0", type=float, default=None,
                    help="initial value (default 1 for decay, 0.5 for logistic)")
    ps.add_argument("--h", type=float, default=0.01)
    ps.add_argument("--x-max", type=float, default=5.0)

    pr = sub.add_parser("series", help="emit series coefficients as JSON")
    pr.add_argument("--target", required=True,
                    choices=("exp", "ln1p", "decay", "picard"))
    pr.add_argument("--order", type=int, default=8)
    pr.add_argument("--kappa", type=float, default=0.9)
    pr.add_argument("--output", default=None)

    pc = sub.add_parser("compare", help="numerical-vs-analytic error reports")
    pc.add_argument("--methods", default="euler,ab2,rk4",
                    help="comma-separated subset of euler,ab2,rk4")
    pc.add_argument("--kappa", type=float, default=0.9)
    pc.add_argument("--beta", type=float, default=1.0)
    pc.add_argument("--x-max", type=float, default=5.0)
    pc.add_argument("--h", type=float, default=0.01,
                    help="largest step size (ladder start when --levels > 1)")
    pc.add_argument("--levels", type=int, default=1,
                    help="halving ladder depth (1 = single step size)")
    pc.add_argument("--out-dir", default=".",
                    help="directory for the per-report CSVs and summary.json")

    pf = sub.add_parser("slope-field", help="tangent-slope grid for the decay field")
    add_common(pf)
    pf.add_argument("--beta", type=float, default=1.0)
    pf.add_argument("--x-min", type=float, default=0.0)
    pf.add_argument("--x-max", type=float, default=5.0)
    pf.add_argument("--f-min", type=float, default=0.0)
    pf.add_argument("--f-max", type=float, default=1.0)
    pf.add_argument("--nx", type=int, default=21)
    pf.add_argument("--nf", type=int, default=21)

    pl = sub.add_parser("logistic", help="logistic closed form vs a numerical method")
    add_common(pl)
    pl.add_argument("--method", default="rk4", choices=("euler", "ab2", "rk4"))
    pl.add_argument("--h", type=float, default=0.01)
    pl.add_argument("--x-max", type=float, default=5.0)
    pl.add_argument("--f0", type=float, default=0.5)
    return ap


def _cmd_eval(args) -> int:
    k = Kappa(args.kappa)
    two_arg = args.fn in ("sum", "product")
    if two_arg and args.y is None:
        raise DomainError(f"--fn {args.fn} needs --y")
    if not two_arg and args.y is not None:
        raise DomainError(f"--fn {args.fn} takes only --x")
    fns = {
        "exp": lambda: kappa_exp(k, args.x),
        "ln": lambda: kappa_ln(k, args.x),
        "sum": lambda: kappa_sum(k, args.x, args.y),
        "product": lambda: kappa_product(k, args.x, args.y),
        "weight": lambda: differential_weight(k, args.x),
        "knum": lambda: to_kappa_number(k, args.x),
    }
    print(_fmt(fns[args.fn]()))
    return 0


def _make_problem(args):
    k = Kappa(args.kappa)
    if args.problem == "decay":
        f0 = 1.0 if args.f0 is None else args.f0
        return DecayProblem(k, beta=args.beta, f0=f0, x_max=args.x_max)
    f0 = 0.5 if args.f0 is None else args.f0
    return LogisticProblem(k, f0=f0, x_max=args.x_max)


def _cmd_solve(args) -> int:
    p = _make_problem(args)
    if args.method == "analytic":
        trace = analytic_trace(p, args.h)
    else:
        trace = SOLVERS[args.method](p, args.h)
    if args.format == "csv":
        rows = [[x, f, trace.method, args.kappa, trace.h]
                for x, f in zip(trace.xs, trace.fs)]
        text = _csv(["x", "f", "method", "kappa", "h"], rows)
    else:
        text = _json_text({
            "method": trace.method,
            "kappa": args.kappa,
            "h": trace.h,
            "samples": [{"x": x, "f": f} for x, f in zip(trace.xs, trace.fs)],
        })
    _write_text(args.output, text)
    return 0


def _cmd_series(args) -> int:
    k = Kappa(args.kappa)
    if args.target == "picard":
        it = picard_iterate(k, args.order)
        variable, coeffs = "u", it.coefficients
    else:
        build = {"exp": exp_kappa_taylor,
                 "ln1p": ln_kappa_shifted_taylor,
                 "decay": decay_series_solution}[args.target]
        s = build(k, args.order)
        variable, coeffs = s.variable, s.coefficients
    text = _json_text({
        "variable": variable,
        "kappa": args.kappa,
        "order": args.order,
        "coefficients": list(coeffs),
    })
    _write_text(args.output, text)
    return 0


def _cmd_compare(args) -> int:
    methods = [m for m in args.methods.split(",") if m]
    if not methods:
        raise DomainError("empty method list")
    if args.levels < 1:
        raise DomainError(f"levels must be >= 1, got {args.levels}")
    p = DecayProblem(Kappa(args.kappa), beta=args.beta, x_max=args.x_max)
    ladder = [args.h / 2**i for i in range(args.levels)]

    summary = {"kappa": args.kappa, "beta": args.beta, "x_max": args.x_max,
               "reports": [], "fitted_orders": {}}
    out_dir = args.out_dir
    for method in sorted(set(methods)):
        max_errs = []
        for i, h in enumerate(ladder):
            report = error_table(p, [method], h)[0]
            rows = [[method, h, x, e] for x, e in zip(report.xs, report.abs_errors)]
            name = f"errors_{method}_{i}.csv" if args.levels > 1 else f"errors_{method}.csv"
            _write_text(str(Path(out_dir) / name),
                        _csv(["method", "h", "x", "abs_error"], rows))
            summary["reports"].append({
                "method": method, "h": h,
                "max_error": report.max_error, "rms_error": report.rms_error,
            })
            max_errs.append(report.max_error)
        summary["fitted_orders"][method] = [
            math.log2(max_errs[i] / max_errs[i + 1]) for i in range(len(max_errs) - 1)]
    _write_text(str(Path(out_dir) / "summary.json"), _json_text(summary))
    return 0


def _linspace(lo: float, hi: float, n: int) -> list[float]:
    if n < 1:
        raise DomainError(f"grid size must be >= 1, got {n}")
    if n == 1:
        return [lo]
    step = (hi - lo) / (n - 1)
    return [lo + i * step for i in range(n)]


def _cmd_slope_field(args) -> int:
    from .ode import slope_field

    # x_max only bounds solver traces; the slope field just needs the rhs.
    p = DecayProblem(Kappa(args.kappa), beta=args.beta,
                     x_max=max(args.x_max, 1.0))
    nodes = slope_field(p,
                        _linspace(args.x_min, args.x_max, args.nx),
                        _linspace(args.f_min, args.f_max, args.nf))
    if args.format == "json":
        text = _json_text({"kappa": args.kappa,
                           "nodes": [{"x": x, "f": f, "slope": s}
                                     for x, f, s in nodes]})
    else:
        text = _csv(["x", "f", "slope"], [list(n) for n in nodes])
    _write_text(args.output, text)
    return 0


def _cmd_logistic(args) -> int:
    from .ode import logistic_closed_form

    lp = LogisticProblem(Kappa(args.kappa), f0=args.f0, x_max=args.x_max)
    trace = SOLVERS[args.method](lp, args.h)
    rows = []
    for x, f in zip(trace.xs, trace.fs):
        exact = logistic_closed_form(lp, x)
        rows.append([x, exact, f, abs(f - exact)])
    if args.format == "json":
        text = _json_text({
            "kappa": args.kappa, "method": args.method, "h": args.h,
            "samples": [{"x": r[0], "f_analytic": r[1], "f_method": r[2],
                         "abs_error": r[3]} for r in rows],
        })
    else:
        text = _csv(["x", "f_analytic", "f_method", "abs_error"], rows)
    _write_text(args.output, text)
    return 0


_COMMANDS = {
    "eval": _cmd_eval,
    "solve": _cmd_solve,
    "series": _cmd_series,
    "compare": _cmd_compare,
    "slope-field": _cmd_slope_field,
    "logistic": _cmd_logistic,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ConvergenceError, FloorError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
