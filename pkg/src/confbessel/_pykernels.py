"""Pure-Python evaluation kernel.

Mirrors ``_ckernels.pyx`` operation for operation so the two backends can be
swapped without observable differences beyond speed.  Keep the loops in the
two files structurally identical when editing either one.
"""

from __future__ import annotations

BACKEND = "python"


def eval_series_kernel(coeffs, alpha: float, offset: float, x: float,
                       stop_rel: float) -> tuple[float, int, float]:
    """Sum ``c_n * x**((n+offset)*alpha)`` over a coefficient list.

    Terms are accumulated in ascending n with Kahan-compensated summation.
    The loop stops early once a nonzero-coefficient term drops below
    ``stop_rel`` times the magnitude of the partial sum; zero coefficients are
    skipped and never trigger the stop test.

    Returns ``(value, terms_used, tail)`` where ``terms_used`` counts the
    coefficients consumed and ``tail`` is the magnitude of the last nonzero
    term that was added (0.0 if every coefficient was zero).
    """
    xa = x ** alpha
    power = x ** (offset * alpha)

    total = 0.0
    carry = 0.0
    tail = 0.0
    used = 0

    n = 0
    n_coeffs = len(coeffs)
    while n < n_coeffs:
        c = coeffs[n]
        if c != 0.0:
            term = c * power
            # Kahan step
            yk = term - carry
            t = total + yk
            carry = (t - total) - yk
            total = t
            tail = term if term >= 0.0 else -term
            used = n + 1
            at = total if total >= 0.0 else -total
            if tail < stop_rel * at:
                return total, used, tail
        power *= xa
        n += 1

    return total, n_coeffs, tail
