"""Command-line front end.

Three subcommands:

* ``eval``   -- one solution, one point, one record
* ``table``  -- one solution over a grid, CSV/JSON/plain rows
* ``check``  -- run the verification suites, stream one report per check

Exit codes: 0 success (all checks passed), 1 at least one check failed,
2 usage or domain error.  Output for a given config is byte-identical
across runs; CSV uses 17 significant digits so values round-trip through
text.  ``NO_COLOR`` suppresses the PASS/FAIL coloring of plain check
output (color is only attempted on a terminal anyway).
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import os
import sys
from dataclasses import dataclass
from typing import Sequence, TextIO

from . import checks
from .bessel import (
    OrderKind,
    bessel_j_neg_integer_series,
    bessel_j_neg_series,
    bessel_j_series,
    classify_order,
    second_solution_integer_order,
    second_solution_order_zero,
)
from .errors import ConfBesselError
from .series import (
    DEFAULT_TERMS,
    EvalResult,
    FracSeries,
    LogSolution,
    eval_log_solution,
    eval_series,
)

__all__ = ["CliConfig", "main", "console_entry", "build_solution", "parse_range"]

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

FAMILIES = ("J", "Jneg", "y2zero", "K")
CHECK_NAMES = ("residual", "identities", "halforder", "scaling", "all")
CSV_HEADER = "x,value,terms_used,tail_estimate"
REPORT_CSV_HEADER = "check_name,passed,max_abs_err,max_rel_err,tolerance,mode"


class UsageError(Exception):
    """Bad flag combination or malformed value; maps to exit code 2."""


@dataclass(frozen=True)
class CliConfig:
    """Resolved invocation: parsed flags with per-command defaults filled in.

    ``family`` is None for a ``check`` run over the default corpus; a
    concrete family narrows ``check`` to a single residual check.
    """

    command: str
    family: str | None = "J"
    order: float = 0.0
    alpha: float = 1.0
    x: float | None = None
    range_spec: tuple[float, float, int] | None = None
    terms: int = DEFAULT_TERMS
    format: str = "plain"
    tolerance: float | None = None
    output_path: str | None = None
    check_name: str = "all"


def _fmt(v: float) -> str:
    return f"{v:.17g}"


def parse_range(text: str) -> tuple[float, float, int]:
    """Parse ``start:stop:count`` into an inclusive linear grid description."""
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"range must be start:stop:count, got {text!r}")
    try:
        start, stop = float(parts[0]), float(parts[1])
        count = int(parts[2])
    except ValueError as exc:
        raise UsageError(f"range must be start:stop:count, got {text!r}") from exc
    if not (math.isfinite(start) and math.isfinite(stop)):
        raise UsageError(f"range endpoints must be finite, got {text!r}")
    if count < 1:
        raise UsageError(f"range count must be >= 1, got {count}")
    if start > stop:
        raise UsageError(f"range start must not exceed stop, got {text!r}")
    return start, stop, count


def _range_points(rng: tuple[float, float, int]) -> list[float]:
    start, stop, count = rng
    if count == 1:
        return [start]
    step = (stop - start) / (count - 1)
    pts = [start + i * step for i in range(count)]
    pts[-1] = stop
    return pts


def build_solution(family: str, order: float, alpha: float,
                   terms: int) -> FracSeries | LogSolution:
    """Construct the requested solution family.

    ``Jneg`` at an integer order routes through the sign-reduction to the
    positive-order series instead of the (undefined) negative-order
    recurrence.  ``K`` insists on integer order >= 1; ``y2zero`` ignores
    the order flag.
    """
    if family == "J":
        return bessel_j_series(order, alpha, terms)
    if family == "Jneg":
        kind = classify_order(order)
        if kind.kind is OrderKind.ZERO:
            return bessel_j_neg_integer_series(0, alpha, terms)
        if kind.kind is OrderKind.POSITIVE_INTEGER:
            return bessel_j_neg_integer_series(kind.m, alpha, terms)
        return bessel_j_neg_series(order, alpha, terms)
    if family == "y2zero":
        return second_solution_order_zero(alpha, terms)
    if family == "K":
        kind = classify_order(order)
        if kind.kind is not OrderKind.POSITIVE_INTEGER:
            raise UsageError(
                f"family K requires an integer order >= 1, got {order:g}")
        return second_solution_integer_order(kind.m, alpha, terms)
    raise UsageError(f"unknown family {family!r}")


def _evaluate(solution: FracSeries | LogSolution, x: float) -> EvalResult:
    if isinstance(solution, LogSolution):
        return eval_log_solution(solution, x)
    return eval_series(solution, x)


def _open_out(path: str | None) -> tuple[TextIO, bool]:
    if path is None:
        return sys.stdout, False
    try:
        return open(path, "w", encoding="utf-8", newline="\n"), True
    except OSError as exc:
        raise UsageError(f"cannot open output path {path!r}: {exc}") from exc


def _emit_rows(rows: list[dict], fmt: str, out: TextIO) -> None:
    if fmt == "csv":
        out.write(CSV_HEADER + "\n")
        for r in rows:
            out.write(f"{_fmt(r['x'])},{_fmt(r['value'])},"
                      f"{r['terms_used']},{_fmt(r['tail_estimate'])}\n")
    elif fmt == "json":
        for r in rows:
            out.write(json.dumps(r) + "\n")
    else:
        out.write(f"{'x':>22} {'value':>24} {'terms':>6} {'tail':>12}\n")
        for r in rows:
            out.write(f"{_fmt(r['x']):>22} {_fmt(r['value']):>24} "
                      f"{r['terms_used']:>6d} {r['tail_estimate']:>12.3e}\n")


def _row(x: float, result: EvalResult) -> dict:
    return {
        "x": x,
        "value": result.value,
        "terms_used": result.terms_used,
        "tail_estimate": result.tail_estimate,
    }


def run_eval(cfg: CliConfig) -> int:
    if cfg.x is None:
        raise UsageError("eval requires --x")
    solution = build_solution(cfg.family, cfg.order, cfg.alpha, cfg.terms)
    result = _evaluate(solution, cfg.x)
    record = _row(cfg.x, result)
    out, close = _open_out(cfg.output_path)
    try:
        if cfg.format == "json":
            out.write(json.dumps(record) + "\n")
        elif cfg.format == "csv":
            _emit_rows([record], "csv", out)
        else:
            for key in ("x", "value"):
                out.write(f"{key} = {_fmt(record[key])}\n")
            out.write(f"terms_used = {record['terms_used']}\n")
            out.write(f"tail_estimate = {_fmt(record['tail_estimate'])}\n")
    finally:
        if close:
            out.close()
    return EXIT_OK


def run_table(cfg: CliConfig) -> int:
    if cfg.range_spec is not None:
        xs = _range_points(cfg.range_spec)
    elif cfg.x is not None:
        xs = [cfg.x]
    else:
        raise UsageError("table requires --range (or --x for a single row)")
    solution = build_solution(cfg.family, cfg.order, cfg.alpha, cfg.terms)
    rows = [_row(x, _evaluate(solution, x)) for x in xs]
    out, close = _open_out(cfg.output_path)
    try:
        _emit_rows(rows, cfg.format, out)
    finally:
        if close:
            out.close()
    return EXIT_OK


def _plain_report_lines(reports: list[checks.CheckReport],
                        color: bool) -> list[str]:
    lines = []
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        if color:
            code = "32" if r.passed else "31"
            status = f"\x1b[{code}m{status}\x1b[0m"
        lines.append(f"{status} {r.check_name} max_abs={r.max_abs_err:.3e} "
                     f"max_rel={r.max_rel_err:.3e} tol={r.tolerance:g} "
                     f"mode={r.mode}")
    n_pass = sum(1 for r in reports if r.passed)
    lines.append(f"{n_pass}/{len(reports)} checks passed")
    return lines


def _collect_reports(cfg: CliConfig) -> list[checks.CheckReport]:
    if cfg.family is not None:
        if cfg.check_name != "residual":
            raise UsageError(
                "--family narrows the residual check only; drop --family or "
                "use --name residual")
        solution = build_solution(cfg.family, cfg.order, cfg.alpha, cfg.terms)
        log = isinstance(solution, LogSolution)
        if cfg.range_spec is not None:
            xs = _range_points(cfg.range_spec)
        elif cfg.x is not None:
            xs = [cfg.x]
        else:
            xs = list(checks.LOG_RESIDUAL_X if log else checks.RESIDUAL_X)
        tol = cfg.tolerance if cfg.tolerance is not None else \
            (checks.LOG_RESIDUAL_TOL if log else checks.RESIDUAL_TOL)
        if cfg.family == "y2zero":
            p = 0.0
        elif cfg.family == "K":
            p = float(classify_order(cfg.order).m)
        else:
            p = cfg.order
        label = f"{cfg.family} order={cfg.order:g}"
        return [checks.check_ode_residual(
            p, cfg.alpha, solution, xs, tol,
            name=f"residual[{label} alpha={cfg.alpha:g}]")]
    if cfg.check_name == "residual":
        return checks.residual_suite(cfg.tolerance)
    if cfg.check_name == "identities":
        return checks.identity_suite(cfg.tolerance)
    if cfg.check_name == "halforder":
        return checks.half_order_suite(cfg.tolerance)
    if cfg.check_name == "scaling":
        return checks.scaling_suite(cfg.tolerance)
    if cfg.check_name == "all":
        return checks.all_suites(cfg.tolerance)
    raise UsageError(f"unknown check name {cfg.check_name!r}")


def run_check(cfg: CliConfig) -> int:
    reports = _collect_reports(cfg)
    out, close = _open_out(cfg.output_path)
    try:
        if cfg.format == "json":
            for r in reports:
                out.write(json.dumps(dataclasses.asdict(r)) + "\n")
        elif cfg.format == "csv":
            out.write(REPORT_CSV_HEADER + "\n")
            for r in reports:
                out.write(f"{r.check_name},{str(r.passed).lower()},"
                          f"{_fmt(r.max_abs_err)},{_fmt(r.max_rel_err)},"
                          f"{_fmt(r.tolerance)},{r.mode}\n")
        else:
            color = (not close and sys.stdout.isatty()
                     and not os.environ.get("NO_COLOR"))
            for line in _plain_report_lines(reports, color):
                out.write(line + "\n")
    finally:
        if close:
            out.close()
    return EXIT_OK if all(r.passed for r in reports) else EXIT_CHECK_FAILED


def _add_common(sub: argparse.ArgumentParser, *, family_default) -> None:
    sub.add_argument("--family", choices=FAMILIES, default=family_default,
                     help="solution family (default %(default)s)")
    sub.add_argument("--order", type=float, default=0.0,
                     help="order p (default %(default)s)")
    sub.add_argument("--alpha", type=float, default=1.0,
                     help="derivative order in (0, 1] (default %(default)s)")
    sub.add_argument("--x", type=float, default=None,
                     help="evaluation point, must be > 0")
    sub.add_argument("--range", dest="range_spec", default=None,
                     metavar="a:b:n",
                     help="inclusive linear grid start:stop:count")
    sub.add_argument("--terms", type=int, default=DEFAULT_TERMS,
                     help="series length (default %(default)s)")
    sub.add_argument("--format", choices=("csv", "json", "plain"),
                     default=None, help="output format")
    sub.add_argument("--tolerance", type=float, default=None,
                     help="override check tolerance")
    sub.add_argument("--out", dest="output_path", default=None,
                     help="write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="confbessel",
        description="Evaluate and verify conformable fractional Bessel "
                    "solutions.")
    subs = parser.add_subparsers(dest="command", required=True)

    p_eval = subs.add_parser("eval", help="evaluate one solution at one point")
    _add_common(p_eval, family_default="J")

    p_table = subs.add_parser("table", help="tabulate one solution on a grid")
    _add_common(p_table, family_default="J")

    p_check = subs.add_parser("check", help="run the verification suites")
    _add_common(p_check, family_default=None)
    p_check.add_argument("--name", dest="check_name", choices=CHECK_NAMES,
                         default=None,
                         help="which suite to run (default: all, or residual "
                              "when --family is given)")
    return parser


def _config_from_namespace(ns: argparse.Namespace) -> CliConfig:
    if ns.command == "eval" and ns.range_spec is not None:
        raise UsageError("eval takes --x, not --range")
    range_spec = parse_range(ns.range_spec) if ns.range_spec is not None \
        else None
    if ns.x is not None and not (math.isfinite(ns.x) and ns.x > 0.0):
        raise UsageError(f"--x must be a finite positive number, got {ns.x}")
    if range_spec is not None and range_spec[0] <= 0.0:
        raise UsageError("--range points must be positive")
    if ns.terms < 1:
        raise UsageError(f"--terms must be >= 1, got {ns.terms}")
    if ns.tolerance is not None and not (ns.tolerance > 0.0):
        raise UsageError(f"--tolerance must be > 0, got {ns.tolerance}")
    fmt = ns.format
    if fmt is None:
        fmt = "csv" if ns.command == "table" else "plain"
    check_name = getattr(ns, "check_name", None)
    if check_name is None:
        check_name = "residual" if ns.family is not None \
            and ns.command == "check" else "all"
    return CliConfig(
        command=ns.command,
        family=ns.family,
        order=ns.order,
        alpha=ns.alpha,
        x=ns.x,
        range_spec=range_spec,
        terms=ns.terms,
        format=fmt,
        tolerance=ns.tolerance,
        output_path=ns.output_path,
        check_name=check_name,
    )


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _config_from_namespace(ns)
        if cfg.command == "eval":
            return run_eval(cfg)
        if cfg.command == "table":
            return run_table(cfg)
        return run_check(cfg)
    except UsageError as exc:
        print(f"confbessel: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConfBesselError as exc:
        print(f"confbessel: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_entry() -> None:
    sys.exit(main())
