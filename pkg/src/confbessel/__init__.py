"""Conformable fractional Bessel functions.

Series solutions of the conformable Bessel equation for derivative orders
alpha in (0, 1]: first-kind functions of order +-p, the order-zero
logarithmic second solution, and the integer-order logarithmic second
solution, together with exact and numeric conformable differentiation, an
identity-verification suite, and a CLI (``confbessel``).
"""

from .series import (
    Alpha,
    EvalResult,
    FracSeries,
    LogSolution,
    conformable_diff_exact,
    eval_log_solution,
    eval_series,
    series_add,
    series_rebase,
    series_scale,
    series_shift,
    series_trim,
)
from .conformable import DiffConfig, conformable_diff2_numeric, conformable_diff_numeric
from .bessel import (
    BesselOrder,
    IndicialData,
    OrderKind,
    SecondSolutionParams,
    b_chain_ratios,
    bessel_j_neg_integer_series,
    bessel_j_neg_series,
    bessel_j_series,
    classify_order,
    gamma,
    harmonic,
    indicial,
    second_solution_integer_order,
    second_solution_order_zero,
    second_solution_params,
)
from .checks import (
    CheckReport,
    all_suites,
    check_derivative_lower,
    check_derivative_raise,
    check_derivative_weighted_lower,
    check_derivative_weighted_raise,
    check_half_order_closed_forms,
    check_negative_order_reflection,
    check_ode_residual,
    check_second_solution_scaling,
    check_series_vs_quadrature,
    check_three_term_recurrence,
    classical_bessel_j,
    half_order_suite,
    identity_suite,
    random_residual_suite,
    residual_suite,
    scaling_suite,
    solution_corpus,
)
from .kernels import backend as kernel_backend

__version__ = "0.1.0"

__all__ = [
    "Alpha",
    "BesselOrder",
    "CheckReport",
    "DiffConfig",
    "EvalResult",
    "FracSeries",
    "IndicialData",
    "LogSolution",
    "OrderKind",
    "SecondSolutionParams",
    "all_suites",
    "b_chain_ratios",
    "bessel_j_neg_integer_series",
    "bessel_j_neg_series",
    "bessel_j_series",
    "check_derivative_lower",
    "check_derivative_raise",
    "check_derivative_weighted_lower",
    "check_derivative_weighted_raise",
    "check_half_order_closed_forms",
    "check_negative_order_reflection",
    "check_ode_residual",
    "check_second_solution_scaling",
    "check_series_vs_quadrature",
    "check_three_term_recurrence",
    "classical_bessel_j",
    "classify_order",
    "conformable_diff2_numeric",
    "conformable_diff_exact",
    "conformable_diff_numeric",
    "eval_log_solution",
    "eval_series",
    "gamma",
    "half_order_suite",
    "harmonic",
    "identity_suite",
    "indicial",
    "kernel_backend",
    "random_residual_suite",
    "residual_suite",
    "scaling_suite",
    "second_solution_integer_order",
    "second_solution_order_zero",
    "second_solution_params",
    "solution_corpus",
    "series_add",
    "series_rebase",
    "series_scale",
    "series_shift",
    "series_trim",
    "__version__",
]
