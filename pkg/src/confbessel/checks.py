r"""Identity and residual verification for the constructed solutions.

Every check returns a :class:`CheckReport` carrying the grid it ran on, the
worst absolute and relative deviations, and a pass flag against its
tolerance.  Checks come in two modes:

* coefficient-wise ("rel"): two series that should be equal term by term
  are aligned to a common offset and compared coefficient against
  coefficient; the gate is the worst per-coefficient relative error.
* pointwise ("abs"): both sides of an identity are evaluated on an
  (order, alpha, x) grid; the gate is the worst absolute deviation.

The classical-oracle comparison uses the integral representation

.. math::

    J_n(z) = \frac{1}{\pi} \int_0^\pi \cos(n\theta - z\sin\theta)\,d\theta,

computed by the composite trapezoidal rule.  The integrand extends to an
even 2*pi-periodic function, so trapezoid convergence is spectral and 512
panels already reach machine accuracy for z <= 20.  The quadrature shares
no code with the series engine; independence is the point.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .bessel import (
    OrderKind,
    bessel_j_neg_integer_series,
    bessel_j_neg_series,
    bessel_j_series,
    classify_order,
    second_solution_integer_order,
    second_solution_order_zero,
)
from .errors import DomainError
from .series import (
    Alpha,
    FracSeries,
    LogSolution,
    conformable_diff_exact,
    eval_log_solution,
    eval_series,
    series_rebase,
    series_scale,
    series_shift,
)

__all__ = [
    "CheckReport",
    "classical_bessel_j",
    "check_ode_residual",
    "check_derivative_weighted_lower",
    "check_derivative_weighted_raise",
    "check_derivative_lower",
    "check_derivative_raise",
    "check_three_term_recurrence",
    "check_negative_order_reflection",
    "check_half_order_closed_forms",
    "check_series_vs_quadrature",
    "check_second_solution_scaling",
    "residual_suite",
    "identity_suite",
    "half_order_suite",
    "scaling_suite",
    "all_suites",
    "solution_corpus",
    "random_residual_suite",
]

# Default verification grids.  Fixed and deterministic: the suites must
# produce identical reports on every run.
IDENTITY_ORDERS = (1, 2, 3)
IDENTITY_ALPHAS = (0.3, 0.5, 0.75, 1.0)
IDENTITY_X = (0.5, 1.0, 2.0, 4.0)
HALF_ORDER_X = (0.25, 0.5, 1.0, 2.0, 4.0, 8.0)
RESIDUAL_ALPHAS = (0.4, 0.7, 1.0)
RESIDUAL_X = tuple(np.linspace(0.5, 5.0, 9))
LOG_RESIDUAL_X = tuple(np.linspace(0.5, 3.0, 6))
SCALING_ALPHAS = (0.3, 0.5, 0.8)
SCALING_X = tuple(np.linspace(0.5, 3.0, 6))
ORACLE_ALPHAS = (0.5, 1.0)

COEFF_TOL = 1e-14
POINT_TOL = 1e-9
RESIDUAL_TOL = 1e-8
LOG_RESIDUAL_TOL = 1e-7
HALF_ORDER_TOL = 1e-10
ORACLE_TOL = 1e-9
SCALING_TOL = 1e-10
N_COEFF_COMPARE = 30


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one named check over a sample grid."""

    check_name: str
    grid: tuple[tuple[float, float, float], ...]
    max_abs_err: float
    max_rel_err: float
    tolerance: float
    mode: str
    passed: bool


def _report(name: str, grid: Sequence[tuple[float, float, float]],
            max_abs: float, max_rel: float, tolerance: float,
            mode: str) -> CheckReport:
    if not grid:
        raise ValueError(f"check {name!r} ran on an empty grid")
    if mode not in ("abs", "rel"):
        raise ValueError(f"unknown report mode {mode!r}")
    gauge = max_abs if mode == "abs" else max_rel
    return CheckReport(
        check_name=name,
        grid=tuple((float(p), float(a), float(x)) for p, a, x in grid),
        max_abs_err=float(max_abs),
        max_rel_err=float(max_rel),
        tolerance=float(tolerance),
        mode=mode,
        passed=bool(gauge <= tolerance),
    )


def classical_bessel_j(n: int, z: float, panels: int = 512) -> float:
    """Classical Bessel J_n(z) by trapezoidal quadrature of the cosine integral."""
    if n < 0 or n != int(n):
        raise ValueError(f"oracle needs integer n >= 0, got {n}")
    if z < 0.0:
        raise ValueError(f"oracle needs z >= 0, got {z}")
    theta = np.linspace(0.0, math.pi, panels + 1)
    values = np.cos(n * theta - z * np.sin(theta))
    total = 0.5 * (values[0] + values[-1]) + values[1:-1].sum()
    return float(total * (math.pi / panels) / math.pi)


def _check_grid_positive(xs: Iterable[float]) -> tuple[float, ...]:
    xs = tuple(float(x) for x in xs)
    for x in xs:
        if x <= 0.0:
            raise DomainError(f"grid points must be positive, got {x}")
    return xs


def _series_lhs_operator(s: FracSeries, p: float, x: float) -> float:
    """Left side of the Bessel equation applied to a plain series at x."""
    a = s.alpha.value
    d1 = conformable_diff_exact(s)
    d2 = conformable_diff_exact(d1)
    x2a = x ** (2.0 * a)
    xa = x ** a
    return (
        x2a * eval_series(d2, x).value
        + a * xa * eval_series(d1, x).value
        + a * a * (x2a - p * p) * eval_series(s, x).value
    )


def check_ode_residual(p: float, alpha: Alpha | float,
                       solution: FracSeries | LogSolution,
                       grid: Iterable[float],
                       tolerance: float = RESIDUAL_TOL,
                       name: str | None = None) -> CheckReport:
    """Residual of the Bessel equation, relative to ``1 + |y(x)|``.

    Plain series go straight through exact differentiation.  For a
    logarithmic solution ``u ln x + v`` the operator expands to
    ``L[u] ln x + 2 x**alpha T(u) + L[v]`` (the derivative of ln x under
    the conformable operator is ``x**-alpha``, and the cross terms collapse
    to the single middle piece), so each ingredient is again a series.
    """
    al = Alpha.of(alpha)
    xs = _check_grid_positive(grid)
    max_abs = 0.0
    max_rel = 0.0
    for x in xs:
        if isinstance(solution, LogSolution):
            lu = _series_lhs_operator(solution.log_part, p, x)
            lv = _series_lhs_operator(solution.plain_part, p, x)
            du = conformable_diff_exact(solution.log_part)
            cross = 2.0 * x ** al.value * eval_series(du, x).value
            residual = lu * math.log(x) + cross + lv
            y = eval_log_solution(solution, x).value
        else:
            residual = _series_lhs_operator(solution, p, x)
            y = eval_series(solution, x).value
        max_abs = max(max_abs, abs(residual))
        max_rel = max(max_rel, abs(residual) / (1.0 + abs(y)))
    return _report(
        name or f"residual[p={p:g} alpha={al.value:g}]",
        [(p, al.value, x) for x in xs],
        max_abs, max_rel, tolerance, "rel",
    )


def _coefficient_deviation(lhs: FracSeries, rhs: FracSeries,
                           n_compare: int) -> tuple[float, float]:
    """Worst absolute and relative coefficient difference after alignment."""
    rhs = series_rebase(rhs, lhs.offset)
    max_abs = 0.0
    max_rel = 0.0
    for i in range(n_compare):
        l = lhs.coeffs[i] if i < len(lhs.coeffs) else 0.0
        r = rhs.coeffs[i] if i < len(rhs.coeffs) else 0.0
        d = abs(l - r)
        max_abs = max(max_abs, d)
        scale = max(abs(l), abs(r))
        if scale > 0.0:
            max_rel = max(max_rel, d / scale)
    return max_abs, max_rel


def _pointwise_deviation(lhs: FracSeries, rhs: FracSeries,
                         xs: Sequence[float]) -> float:
    worst = 0.0
    for x in xs:
        worst = max(worst, abs(eval_series(lhs, x).value
                               - eval_series(rhs, x).value))
    return worst


def check_derivative_weighted_lower(p: int, alpha: Alpha | float,
                                    grid: Iterable[float],
                                    tolerance: float = COEFF_TOL,
                                    n_terms: int = 60) -> CheckReport:
    """T(x**(p*alpha) * J_p) equals alpha * x**(p*alpha) * J_{p-1}.

    Integer p >= 1.  Coefficient-wise gate; the report's absolute column
    records the pointwise spot deviations on the grid.
    """
    if p < 1 or p != int(p):
        raise ValueError(f"weighted lowering identity needs integer p >= 1, got {p}")
    al = Alpha.of(alpha)
    xs = _check_grid_positive(grid)
    lhs = conformable_diff_exact(series_shift(bessel_j_series(p, al, n_terms), p))
    rhs = series_scale(series_shift(bessel_j_series(p - 1, al, n_terms), p),
                       al.value)
    _, max_rel = _coefficient_deviation(lhs, rhs, N_COEFF_COMPARE)
    max_abs = _pointwise_deviation(lhs, rhs, xs)
    return _report(
        f"derivative-weighted-lower[p={p} alpha={al.value:g}]",
        [(p, al.value, x) for x in xs],
        max_abs, max_rel, tolerance, "rel",
    )


def check_derivative_weighted_raise(p: int, alpha: Alpha | float,
                                    grid: Iterable[float],
                                    tolerance: float = COEFF_TOL,
                                    n_terms: int = 60) -> CheckReport:
    """T(x**(-p*alpha) * J_p) equals -alpha * x**(-p*alpha) * J_{p+1}.

    Integer p >= 0; the weight cancels the offset, so at p = 0 this is the
    bare statement T(J_0) = -alpha * J_1.
    """
    if p < 0 or p != int(p):
        raise ValueError(f"weighted raising identity needs integer p >= 0, got {p}")
    al = Alpha.of(alpha)
    xs = _check_grid_positive(grid)
    lhs = conformable_diff_exact(series_shift(bessel_j_series(p, al, n_terms), -p))
    rhs = series_scale(series_shift(bessel_j_series(p + 1, al, n_terms), -float(p)),
                       -al.value)
    _, max_rel = _coefficient_deviation(lhs, rhs, N_COEFF_COMPARE)
    max_abs = _pointwise_deviation(lhs, rhs, xs)
    return _report(
        f"derivative-weighted-raise[p={p} alpha={al.value:g}]",
        [(p, al.value, x) for x in xs],
        max_abs, max_rel, tolerance, "rel",
    )


def check_derivative_lower(p: int, alpha: Alpha | float,
                           grid: Iterable[float],
                           tolerance: float = POINT_TOL,
                           n_terms: int = 60) -> CheckReport:
    """T(J_p) equals alpha*J_{p-1} - (alpha*p/x**alpha)*J_p, pointwise.

    The x**-alpha weight makes this a pointwise identity, not an aligned
    coefficient identity.  Integer p >= 1.
    """
    if p < 1 or p != int(p):
        raise ValueError(f"lowering identity needs integer p >= 1, got {p}")
    al = Alpha.of(alpha)
    a = al.value
    xs = _check_grid_positive(grid)
    jp = bessel_j_series(p, al, n_terms)
    jm = bessel_j_series(p - 1, al, n_terms)
    djp = conformable_diff_exact(jp)
    max_abs = 0.0
    max_rel = 0.0
    for x in xs:
        lhs = eval_series(djp, x).value
        rhs = (a * eval_series(jm, x).value
               - (a * p / x ** a) * eval_series(jp, x).value)
        d = abs(lhs - rhs)
        max_abs = max(max_abs, d)
        max_rel = max(max_rel, d / (1.0 + abs(rhs)))
    return _report(
        f"derivative-lower[p={p} alpha={a:g}]",
        [(p, a, x) for x in xs],
        max_abs, max_rel, tolerance, "abs",
    )


def check_derivative_raise(p: int, alpha: Alpha | float,
                           grid: Iterable[float],
                           tolerance: float = POINT_TOL,
                           n_terms: int = 60) -> CheckReport:
    """T(J_p) equals (alpha*p/x**alpha)*J_p - alpha*J_{p+1}, pointwise."""
    if p < 0 or p != int(p):
        raise ValueError(f"raising identity needs integer p >= 0, got {p}")
    al = Alpha.of(alpha)
    a = al.value
    xs = _check_grid_positive(grid)
    jp = bessel_j_series(p, al, n_terms)
    jn = bessel_j_series(p + 1, al, n_terms)
    djp = conformable_diff_exact(jp)
    max_abs = 0.0
    max_rel = 0.0
    for x in xs:
        lhs = eval_series(djp, x).value
        rhs = ((a * p / x ** a) * eval_series(jp, x).value
               - a * eval_series(jn, x).value)
        d = abs(lhs - rhs)
        max_abs = max(max_abs, d)
        max_rel = max(max_rel, d / (1.0 + abs(rhs)))
    return _report(
        f"derivative-raise[p={p} alpha={a:g}]",
        [(p, a, x) for x in xs],
        max_abs, max_rel, tolerance, "abs",
    )


def check_three_term_recurrence(p: int, alpha: Alpha | float,
                                grid: Iterable[float],
                                tolerance: float = POINT_TOL,
                                n_terms: int = 60) -> CheckReport:
    """J_{p+1} equals (2p/x**alpha)*J_p - J_{p-1}, pointwise, integer p >= 1."""
    if p < 1 or p != int(p):
        raise ValueError(f"three-term recurrence needs integer p >= 1, got {p}")
    al = Alpha.of(alpha)
    a = al.value
    xs = _check_grid_positive(grid)
    jm = bessel_j_series(p - 1, al, n_terms)
    jp = bessel_j_series(p, al, n_terms)
    jn = bessel_j_series(p + 1, al, n_terms)
    max_abs = 0.0
    max_rel = 0.0
    for x in xs:
        lhs = eval_series(jn, x).value
        rhs = (2.0 * p / x ** a) * eval_series(jp, x).value \
            - eval_series(jm, x).value
        d = abs(lhs - rhs)
        max_abs = max(max_abs, d)
        max_rel = max(max_rel, d / (1.0 + abs(rhs)))
    return _report(
        f"three-term-recurrence[p={p} alpha={a:g}]",
        [(p, a, x) for x in xs],
        max_abs, max_rel, tolerance, "abs",
    )


def check_negative_order_reflection(m: int, alpha: Alpha | float,
                                    grid: Iterable[float] = (1.0,),
                                    tolerance: float = COEFF_TOL,
                                    n_terms: int = 60) -> CheckReport:
    """Order -m equals (-1)**m times order m, coefficient for coefficient."""
    if m < 0 or m != int(m):
        raise ValueError(f"reflection check needs integer m >= 0, got {m}")
    al = Alpha.of(alpha)
    xs = _check_grid_positive(grid)
    lhs = bessel_j_neg_integer_series(m, al, n_terms)
    sign = -1.0 if m % 2 else 1.0
    rhs = series_scale(bessel_j_series(m, al, n_terms), sign)
    _, max_rel = _coefficient_deviation(lhs, rhs, N_COEFF_COMPARE)
    max_abs = _pointwise_deviation(lhs, rhs, xs)
    return _report(
        f"negative-order-reflection[m={m} alpha={al.value:g}]",
        [(m, al.value, x) for x in xs],
        max_abs, max_rel, tolerance, "rel",
    )


def check_half_order_closed_forms(alpha: Alpha | float,
                                  grid: Iterable[float],
                                  tolerance: float = HALF_ORDER_TOL,
                                  n_terms: int = 60) -> CheckReport:
    """Orders +-1/2 against their sine and cosine closed forms.

    ``J_{1/2}(x) = sqrt(2/(pi*x**alpha)) * sin(x**alpha)`` and the order
    -1/2 function is the same envelope times cos.
    """
    al = Alpha.of(alpha)
    a = al.value
    xs = _check_grid_positive(grid)
    plus = bessel_j_series(0.5, al, n_terms)
    minus = bessel_j_neg_series(0.5, al, n_terms)
    max_abs = 0.0
    max_rel = 0.0
    grid_rows = []
    for x in xs:
        xa = x ** a
        envelope = math.sqrt(2.0 / (math.pi * xa))
        for p, series, ref in ((0.5, plus, envelope * math.sin(xa)),
                               (-0.5, minus, envelope * math.cos(xa))):
            d = abs(eval_series(series, x).value - ref)
            max_abs = max(max_abs, d)
            max_rel = max(max_rel, d / (1.0 + abs(ref)))
            grid_rows.append((p, a, x))
    return _report(
        f"half-order[alpha={a:g}]", grid_rows, max_abs, max_rel, tolerance, "abs",
    )


def check_series_vs_quadrature(p: int, alpha: Alpha | float,
                               grid: Iterable[float],
                               tolerance: float = ORACLE_TOL,
                               n_terms: int = 60) -> CheckReport:
    """Series evaluation against the quadrature oracle at argument x**alpha.

    Exercises both the series engine and the alpha-scaling structure: the
    conformable function of order p at x must match the classical function
    at x**alpha, computed by an entirely independent method.
    """
    if p < 0 or p != int(p):
        raise ValueError(f"oracle comparison needs integer p >= 0, got {p}")
    al = Alpha.of(alpha)
    a = al.value
    xs = _check_grid_positive(grid)
    series = bessel_j_series(p, al, n_terms)
    max_abs = 0.0
    max_rel = 0.0
    for x in xs:
        ref = classical_bessel_j(p, x ** a)
        d = abs(eval_series(series, x).value - ref)
        max_abs = max(max_abs, d)
        max_rel = max(max_rel, d / (1.0 + abs(ref)))
    return _report(
        f"series-vs-quadrature[p={p} alpha={a:g}]",
        [(p, a, x) for x in xs],
        max_abs, max_rel, tolerance, "abs",
    )


def check_second_solution_scaling(alpha: Alpha | float,
                                  grid: Iterable[float],
                                  m: int | None = None,
                                  tolerance: float = SCALING_TOL,
                                  n_terms: int = 60) -> CheckReport:
    """Second solutions at alpha vs the rescaled alpha = 1 instance.

    The alpha-instance evaluated at x must equal ``1/alpha`` times the
    alpha = 1 instance evaluated at x**alpha.  ``m = None`` checks the
    order-zero logarithmic solution, ``m >= 1`` the integer-order one.
    """
    al = Alpha.of(alpha)
    a = al.value
    xs = _check_grid_positive(grid)
    if m is None:
        mine = second_solution_order_zero(al, n_terms)
        classical = second_solution_order_zero(1.0, n_terms)
        label = "zero"
        p = 0.0
    else:
        if m < 1 or m != int(m):
            raise ValueError(f"integer-order scaling check needs m >= 1, got {m}")
        mine = second_solution_integer_order(m, al, n_terms)
        classical = second_solution_integer_order(m, 1.0, n_terms)
        label = f"m={m}"
        p = float(m)
    max_abs = 0.0
    max_rel = 0.0
    for x in xs:
        lhs = eval_log_solution(mine, x).value
        rhs = eval_log_solution(classical, x ** a).value / a
        d = abs(lhs - rhs)
        max_abs = max(max_abs, d)
        max_rel = max(max_rel, d / (1.0 + abs(rhs)))
    return _report(
        f"second-solution-scaling[{label} alpha={a:g}]",
        [(p, a, x) for x in xs],
        max_abs, max_rel, tolerance, "abs",
    )


def solution_corpus(alpha: Alpha | float, n_terms: int = 60):
    """The fixed family of constructed solutions used by the suites.

    Yields ``(label, order, solution)`` triples: first-kind series at
    p in {0, 1/2, 1, 5/2, 3}, negative orders -1/2 and -5/2, and the two
    kinds of logarithmic second solutions.
    """
    al = Alpha.of(alpha)
    for p in (0.0, 0.5, 1.0, 2.5, 3.0):
        yield f"J[p={p:g}]", p, bessel_j_series(p, al, n_terms)
    for p in (0.5, 2.5):
        yield f"Jneg[p={p:g}]", p, bessel_j_neg_series(p, al, n_terms)
    yield "y2zero", 0.0, second_solution_order_zero(al, n_terms)
    for m in (1, 2):
        yield f"K[m={m}]", float(m), second_solution_integer_order(m, al, n_terms)


def residual_suite(tolerance: float | None = None) -> list[CheckReport]:
    """Residual checks for the whole corpus on the standard grids."""
    reports = []
    for a in RESIDUAL_ALPHAS:
        for label, p, solution in solution_corpus(a):
            log = isinstance(solution, LogSolution)
            xs = LOG_RESIDUAL_X if log else RESIDUAL_X
            tol = tolerance if tolerance is not None else \
                (LOG_RESIDUAL_TOL if log else RESIDUAL_TOL)
            reports.append(check_ode_residual(
                p, a, solution, xs, tol,
                name=f"residual[{label} alpha={a:g}]",
            ))
    return reports


def identity_suite(tolerance: float | None = None) -> list[CheckReport]:
    """All six derivative/recurrence identities on the standard grid."""
    point_tol = tolerance if tolerance is not None else POINT_TOL
    coeff_tol = tolerance if tolerance is not None else COEFF_TOL
    reports = []
    for a in IDENTITY_ALPHAS:
        for p in IDENTITY_ORDERS:
            reports.append(check_derivative_weighted_lower(p, a, IDENTITY_X, coeff_tol))
            reports.append(check_derivative_weighted_raise(p, a, IDENTITY_X, coeff_tol))
            reports.append(check_derivative_lower(p, a, IDENTITY_X, point_tol))
            reports.append(check_derivative_raise(p, a, IDENTITY_X, point_tol))
            reports.append(check_three_term_recurrence(p, a, IDENTITY_X, point_tol))
            reports.append(check_negative_order_reflection(p, a, IDENTITY_X, coeff_tol))
        # the raising identities and the reflection also make sense at p = 0
        reports.append(check_derivative_weighted_raise(0, a, IDENTITY_X, coeff_tol))
        reports.append(check_derivative_raise(0, a, IDENTITY_X, point_tol))
        reports.append(check_negative_order_reflection(0, a, IDENTITY_X, coeff_tol))
    return reports


def half_order_suite(tolerance: float | None = None) -> list[CheckReport]:
    tol = tolerance if tolerance is not None else HALF_ORDER_TOL
    return [check_half_order_closed_forms(a, HALF_ORDER_X, tol)
            for a in IDENTITY_ALPHAS]


def scaling_suite(tolerance: float | None = None) -> list[CheckReport]:
    """Oracle agreement for integer orders plus second-solution rescaling."""
    reports = []
    for a in ORACLE_ALPHAS:
        xs = [x for x in (0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 64.0)
              if x ** a <= 8.0]
        tol = tolerance if tolerance is not None else ORACLE_TOL
        for p in (0, 1, 2):
            reports.append(check_series_vs_quadrature(p, a, xs, tol))
    stol = tolerance if tolerance is not None else SCALING_TOL
    for a in SCALING_ALPHAS:
        reports.append(check_second_solution_scaling(a, SCALING_X, None, stol))
        for m in (1, 2):
            reports.append(check_second_solution_scaling(a, SCALING_X, m, stol))
    return reports


def all_suites(tolerance: float | None = None) -> list[CheckReport]:
    return (residual_suite(tolerance) + identity_suite(tolerance)
            + half_order_suite(tolerance) + scaling_suite(tolerance))


def random_residual_suite(seed: int, cases: int = 8,
                          tolerance: float | None = None) -> list[CheckReport]:
    """Seeded exploratory fuzzing: residual checks at random orders and grids.

    Deterministic for a given seed, so a surprising failure can be replayed.
    Not part of the acceptance gate; the gating suites use fixed grids.
    Orders mix generic reals, half-odd integers and integers; a random subset
    takes the negative-order branch, with integer orders routed through the
    sign reduction.
    """
    rng = random.Random(seed)
    tol = tolerance if tolerance is not None else RESIDUAL_TOL
    reports = []
    for i in range(cases):
        a = rng.uniform(0.25, 1.0)
        roll = rng.random()
        if roll < 0.4:
            p = rng.uniform(0.0, 3.5)
        elif roll < 0.7:
            p = rng.randrange(0, 4) + 0.5
        else:
            p = float(rng.randrange(0, 4))
        xs = sorted(rng.uniform(0.3, 4.0) for _ in range(5))
        if rng.random() < 0.3 and p > 0.0:
            kind = classify_order(p)
            if kind.kind is OrderKind.POSITIVE_INTEGER:
                solution = bessel_j_neg_integer_series(kind.m, a)
            else:
                solution = bessel_j_neg_series(p, a)
            label = f"Jneg[p={p:g}]"
        else:
            solution = bessel_j_series(p, a)
            label = f"J[p={p:g}]"
        reports.append(check_ode_residual(
            p, a, solution, xs, tol,
            name=f"fuzz-residual[{i}: {label} alpha={a:.3f}]"))
    return reports
