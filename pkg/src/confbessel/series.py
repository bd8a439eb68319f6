r"""Truncated fractional power series in ``x**alpha`` and their calculus.

A :class:`FracSeries` stores the data of

.. math::

    s(x) = \sum_{n=0}^{N} c_n \, x^{(n + r)\alpha}, \qquad x > 0,

with order ``alpha`` in (0, 1], a real exponent offset ``r`` and a dense
coefficient list ``c_0 .. c_N``.  Everything here is an immutable value and
every operation is a pure function, so series can be shared freely between
threads and grid evaluations parallelised by the caller.

The conformable derivative acts termwise through the power rule
``x**q -> q * x**(q - alpha)`` (divided by nothing: the operator scales each
term by ``alpha * (n + r)`` and lowers the offset by one), which makes
differentiation exact on this representation.  Numerical evaluation lives in
the kernel backends (compiled if available) and uses compensated summation,
because the coefficient sequences of interest alternate in sign and pass
through large intermediate terms before factorial decay sets in.
"""

from __future__ import annotations

import math
from array import array
from dataclasses import dataclass
from functools import cached_property

from .errors import AlignmentError, DomainError
from .kernels import eval_series_kernel

__all__ = [
    "Alpha",
    "FracSeries",
    "LogSolution",
    "EvalResult",
    "series_add",
    "series_scale",
    "series_shift",
    "series_trim",
    "series_rebase",
    "conformable_diff_exact",
    "eval_series",
    "eval_log_solution",
]

#: Tolerance for treating two exponent offsets as equal.  Offsets come from
#: user-supplied orders, never from accumulated arithmetic, so a fixed
#: absolute tolerance is safe.
OFFSET_TOL = 1e-12

#: Default relative threshold for the early stop in series evaluation.
STOP_REL = 1e-18

#: Default number of coefficient slots in constructed solutions.  Factorial
#: decay makes 60 terms sufficient for double precision up to x**alpha ~ 10.
DEFAULT_TERMS = 60


@dataclass(frozen=True)
class Alpha:
    """Derivative order, restricted to the interval (0, 1]."""

    value: float

    def __post_init__(self):
        v = self.value
        if not (isinstance(v, (int, float)) and math.isfinite(v)):
            raise DomainError(f"alpha must be a finite real number, got {v!r}")
        if not 0.0 < v <= 1.0:
            raise DomainError(f"alpha must lie in (0, 1], got {v}")
        object.__setattr__(self, "value", float(v))

    @classmethod
    def of(cls, a: "Alpha | float") -> "Alpha":
        """Coerce a plain float (or an Alpha) into an Alpha."""
        return a if isinstance(a, cls) else cls(float(a))


@dataclass(frozen=True)
class FracSeries:
    """Truncated series ``sum(c_n * x**((n + offset) * alpha))``."""

    alpha: Alpha
    offset: float
    coeffs: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "alpha", Alpha.of(self.alpha))
        if not math.isfinite(self.offset):
            raise ValueError(f"offset must be finite, got {self.offset!r}")
        object.__setattr__(self, "offset", float(self.offset))
        coeffs = tuple(float(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("coefficient list must be non-empty")
        for c in coeffs:
            if not math.isfinite(c):
                raise ValueError(f"non-finite coefficient {c!r}")
        object.__setattr__(self, "coeffs", coeffs)

    @cached_property
    def _packed(self) -> array:
        # Contiguous double buffer for the kernel backends.
        return array("d", self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: "FracSeries") -> "FracSeries":
        return series_add(self, other)

    def __mul__(self, k: float) -> "FracSeries":
        return series_scale(self, k)

    __rmul__ = __mul__

    def __neg__(self) -> "FracSeries":
        return series_scale(self, -1.0)

    def exponent(self, n: int) -> float:
        """Exponent of x carried by coefficient slot ``n``."""
        return (n + self.offset) * self.alpha.value


@dataclass(frozen=True)
class LogSolution:
    """Solution of the form ``log_part(x) * ln(x) + plain_part(x)``, x > 0."""

    log_part: FracSeries
    plain_part: FracSeries

    def __post_init__(self):
        da = abs(self.log_part.alpha.value - self.plain_part.alpha.value)
        if da > OFFSET_TOL:
            raise AlignmentError(
                "log_part and plain_part must share the same alpha "
                f"({self.log_part.alpha.value} vs {self.plain_part.alpha.value})"
            )


@dataclass(frozen=True)
class EvalResult:
    """Evaluated value with truncation bookkeeping.

    ``tail_estimate`` is the magnitude of the last nonzero term that entered
    the sum; for alternating series with eventually decreasing terms it
    bounds the truncation error.
    """

    value: float
    terms_used: int
    tail_estimate: float


def _check_combinable(a: FracSeries, b: FracSeries) -> None:
    if abs(a.alpha.value - b.alpha.value) > OFFSET_TOL:
        raise AlignmentError(
            f"alpha mismatch: {a.alpha.value} vs {b.alpha.value}"
        )
    if abs(a.offset - b.offset) > OFFSET_TOL:
        raise AlignmentError(
            f"offset mismatch: {a.offset} vs {b.offset}; "
            "re-represent one side with series_rebase first"
        )


def series_add(a: FracSeries, b: FracSeries) -> FracSeries:
    """Coefficient-wise sum of two series with equal alpha and offset.

    The shorter coefficient list is padded with zeros on the right.
    """
    _check_combinable(a, b)
    n = max(len(a.coeffs), len(b.coeffs))
    ca = a.coeffs + (0.0,) * (n - len(a.coeffs))
    cb = b.coeffs + (0.0,) * (n - len(b.coeffs))
    return FracSeries(a.alpha, a.offset, tuple(x + y for x, y in zip(ca, cb)))


def series_scale(a: FracSeries, k: float) -> FracSeries:
    """Multiply every coefficient by the finite scalar ``k``."""
    if not math.isfinite(k):
        raise ValueError(f"scale factor must be finite, got {k!r}")
    return FracSeries(a.alpha, a.offset, tuple(k * c for c in a.coeffs))


def series_shift(a: FracSeries, dr: float) -> FracSeries:
    """Multiply the represented function by ``x**(dr * alpha)``.

    A positive integer ``dr`` prepends that many zero coefficients and keeps
    the offset (a reindex by whole steps of alpha); any other ``dr``,
    including negative integers, is absorbed into the offset with the
    coefficients untouched.  Both routes represent the same multiplication.
    """
    if dr == 0:
        return a
    dr_int = round(dr)
    if abs(dr - dr_int) <= OFFSET_TOL and dr_int >= 1:
        return FracSeries(a.alpha, a.offset, (0.0,) * dr_int + a.coeffs)
    return FracSeries(a.alpha, a.offset + dr, a.coeffs)


def series_trim(a: FracSeries) -> FracSeries:
    """Drop trailing zero coefficients, keeping at least one slot.

    The offset never changes under trimming.
    """
    n = len(a.coeffs)
    while n > 1 and a.coeffs[n - 1] == 0.0:
        n -= 1
    if n == len(a.coeffs):
        return a
    return FracSeries(a.alpha, a.offset, a.coeffs[:n])


def series_rebase(a: FracSeries, offset: float) -> FracSeries:
    """Re-represent the same function with a different offset.

    Only whole-step changes are possible: ``a.offset - offset`` must be a
    nonnegative integer (zeros are prepended) or a negative integer whose
    magnitude is covered by leading zero coefficients (they are dropped).
    Unlike :func:`series_shift` this never changes the represented function.
    """
    steps = a.offset - offset
    k = round(steps)
    if abs(steps - k) > OFFSET_TOL:
        raise AlignmentError(
            f"cannot rebase offset {a.offset} to {offset}: "
            "difference is not a whole number of alpha-steps"
        )
    if k == 0:
        return FracSeries(a.alpha, float(offset), a.coeffs)
    if k > 0:
        return FracSeries(a.alpha, float(offset), (0.0,) * k + a.coeffs)
    if any(c != 0.0 for c in a.coeffs[:-k]):
        raise AlignmentError(
            f"cannot rebase offset {a.offset} to {offset}: "
            "leading coefficients are nonzero"
        )
    coeffs = a.coeffs[-k:] or (0.0,)
    return FracSeries(a.alpha, float(offset), coeffs)


def conformable_diff_exact(a: FracSeries) -> FracSeries:
    """Apply the conformable derivative termwise, exactly.

    Each term ``c_n * x**((n+r)*alpha)`` maps to
    ``alpha*(n+r)*c_n * x**((n+r-1)*alpha)``; the result keeps the
    coefficient count and carries offset ``r - 1``.
    """
    al = a.alpha.value
    r = a.offset
    return FracSeries(
        a.alpha,
        r - 1.0,
        tuple(al * (n + r) * c for n, c in enumerate(a.coeffs)),
    )


def eval_series(a: FracSeries, x: float, stop_rel: float = STOP_REL) -> EvalResult:
    """Evaluate the series at ``x > 0``.

    Terms are summed in ascending order with compensated summation; the sum
    stops early once a nonzero term falls below ``stop_rel`` times the
    running total.
    """
    if not (isinstance(x, (int, float)) and math.isfinite(x)):
        raise DomainError(f"x must be a finite real number, got {x!r}")
    if x <= 0.0:
        raise DomainError(f"series evaluation requires x > 0, got {x}")
    value, used, tail = eval_series_kernel(
        a._packed, a.alpha.value, a.offset, float(x), stop_rel
    )
    return EvalResult(value, used, tail)


def eval_log_solution(s: LogSolution, x: float,
                      stop_rel: float = STOP_REL) -> EvalResult:
    """Evaluate ``log_part(x) * ln(x) + plain_part(x)`` at ``x > 0``.

    ``terms_used`` is the larger of the two parts' counts and the tail
    estimate combines both parts (the log part's tail weighted by |ln x|).
    """
    lg = eval_series(s.log_part, x, stop_rel)
    pl = eval_series(s.plain_part, x, stop_rel)
    lnx = math.log(x)
    return EvalResult(
        lg.value * lnx + pl.value,
        max(lg.terms_used, pl.terms_used),
        abs(lnx) * lg.tail_estimate + pl.tail_estimate,
    )
