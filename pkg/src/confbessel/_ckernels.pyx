# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled evaluation kernel.

Structural twin of ``_pykernels.py``; see that module for the algorithm
notes.  Both backends must stay operation-for-operation identical.
"""

from libc.math cimport pow, fabs

BACKEND = "cython"


def eval_series_kernel(const double[::1] coeffs, double alpha, double offset,
                       double x, double stop_rel):
    """Kahan-summed evaluation of sum(c_n * x**((n+offset)*alpha)).

    Returns ``(value, terms_used, tail)``; see the pure-Python twin for the
    exact semantics of the early stop and the tail estimate.
    """
    cdef double xa = pow(x, alpha)
    cdef double power = pow(x, offset * alpha)

    cdef double total = 0.0
    cdef double carry = 0.0
    cdef double tail = 0.0
    cdef double c, term, yk, t
    cdef Py_ssize_t used = 0
    cdef Py_ssize_t n = 0
    cdef Py_ssize_t n_coeffs = coeffs.shape[0]

    while n < n_coeffs:
        c = coeffs[n]
        if c != 0.0:
            term = c * power
            yk = term - carry
            t = total + yk
            carry = (t - total) - yk
            total = t
            tail = fabs(term)
            used = n + 1
            if tail < stop_rel * fabs(total):
                return total, used, tail
        power *= xa
        n += 1

    return total, n_coeffs, tail
