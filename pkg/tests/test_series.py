"""Tests for the fractional power series type and its calculus."""

import dataclasses
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from confbessel import (
    Alpha,
    FracSeries,
    LogSolution,
    bessel_j_series,
    conformable_diff_exact,
    eval_log_solution,
    eval_series,
    series_add,
    series_rebase,
    series_scale,
    series_shift,
    series_trim,
)
from confbessel.errors import AlignmentError, DomainError


def S(alpha, offset, coeffs):
    return FracSeries(Alpha.of(alpha), offset, tuple(coeffs))


class TestAlpha:
    def test_accepts_half_open_interval(self):
        assert Alpha.of(1.0).value == 1.0
        assert Alpha.of(0.3).value == 0.3
        assert Alpha.of(1e-6).value == 1e-6

    @pytest.mark.parametrize("bad", [0.0, -0.5, 1.5, float("inf"), float("nan")])
    def test_rejects_out_of_range(self, bad):
        with pytest.raises(DomainError):
            Alpha.of(bad)

    def test_of_is_idempotent(self):
        a = Alpha(0.5)
        assert Alpha.of(a) is a


class TestFracSeries:
    def test_exponent_combines_offset_and_alpha(self):
        s = S(0.5, 1.5, [1.0, 0.0, 2.0])
        assert s.exponent(0) == pytest.approx(0.75)
        assert s.exponent(2) == pytest.approx((2 + 1.5) * 0.5)

    def test_rejects_empty_and_non_finite(self):
        with pytest.raises(ValueError):
            S(1.0, 0.0, [])
        with pytest.raises(ValueError):
            S(1.0, 0.0, [1.0, float("nan")])
        with pytest.raises(ValueError):
            S(1.0, float("inf"), [1.0])

    def test_immutable(self):
        s = S(1.0, 0.0, [1.0])
        with pytest.raises(dataclasses.FrozenInstanceError):
            s.offset = 2.0

    def test_len_and_dunders(self):
        a = S(1.0, 0.0, [1.0, 2.0])
        assert len(a) == 2
        assert (2.0 * a).coeffs == (2.0, 4.0)
        assert (-a).coeffs == (-1.0, -2.0)
        assert (a + a).coeffs == (2.0, 4.0)


class TestSeriesAdd:
    def test_pads_shorter_operand(self):
        a = S(1.0, 0.0, [1.0, 2.0])
        b = S(1.0, 0.0, [3.0])
        assert series_add(a, b).coeffs == (4.0, 2.0)

    def test_zero_series_is_identity(self):
        a = S(0.5, 1.0, [1.0, -0.25])
        z = S(0.5, 1.0, [0.0])
        assert series_add(a, z).coeffs == a.coeffs
        assert series_add(a, z).offset == a.offset

    def test_offset_mismatch_raises(self):
        with pytest.raises(AlignmentError):
            series_add(S(0.5, 1.0, [1.0]), S(0.5, 0.0, [1.0]))

    def test_alpha_mismatch_raises(self):
        with pytest.raises(AlignmentError):
            series_add(S(0.5, 0.0, [1.0]), S(0.75, 0.0, [1.0]))


class TestSeriesScale:
    def test_scale_by_zero_and_one(self):
        a = S(1.0, 0.0, [1.0, -0.25])
        assert series_scale(a, 0.0).coeffs == (0.0, 0.0)
        assert series_scale(a, 1.0).coeffs == a.coeffs

    def test_scales_each_coefficient(self):
        a = S(1.0, 0.0, [1.0, -0.25])
        assert series_scale(a, 2.0).coeffs == (2.0, -0.5)

    def test_non_finite_factor_raises(self):
        with pytest.raises(ValueError):
            series_scale(S(1.0, 0.0, [1.0]), float("nan"))


class TestSeriesShift:
    def test_positive_integer_prepends_zeros(self):
        a = S(1.0, 0.0, [1.0, 2.0])
        shifted = series_shift(a, 2)
        assert shifted.coeffs == (0.0, 0.0, 1.0, 2.0)
        assert shifted.offset == 0.0

    def test_zero_is_identity(self):
        a = S(1.0, 0.0, [1.0, 2.0])
        assert series_shift(a, 0) is a

    def test_non_integer_moves_offset(self):
        a = S(1.0, 0.0, [1.0])
        shifted = series_shift(a, -0.5)
        assert shifted.offset == -0.5
        assert shifted.coeffs == (1.0,)

    def test_negative_integer_moves_offset(self):
        a = S(1.0, 1.0, [1.0, 2.0])
        shifted = series_shift(a, -1)
        assert shifted.offset == 0.0
        assert shifted.coeffs == (1.0, 2.0)

    @pytest.mark.parametrize("dr", [1, 3, 0.5, -1.5, -2])
    def test_shift_multiplies_by_power(self, dr):
        # both shift routes must represent multiplication by x**(dr*alpha)
        a = S(0.7, 0.5, [1.0, -0.5, 0.25, 0.1])
        for x in (0.5, 1.0, 2.5):
            lhs = eval_series(series_shift(a, dr), x).value
            rhs = x ** (dr * 0.7) * eval_series(a, x).value
            assert lhs == pytest.approx(rhs, rel=5e-15)


class TestSeriesTrim:
    def test_drops_trailing_zeros_only(self):
        a = S(1.0, 0.0, [0.0, 1.0, 0.0, 0.0])
        assert series_trim(a).coeffs == (0.0, 1.0)

    def test_keeps_one_slot(self):
        a = S(1.0, 0.0, [0.0, 0.0])
        assert series_trim(a).coeffs == (0.0,)

    def test_noop_returns_same_object(self):
        a = S(1.0, 0.0, [1.0, 2.0])
        assert series_trim(a) is a


class TestSeriesRebase:
    def test_lowering_offset_prepends_zeros(self):
        a = S(1.0, 2.0, [1.0, 2.0])
        r = series_rebase(a, 0.0)
        assert r.offset == 0.0
        assert r.coeffs == (0.0, 0.0, 1.0, 2.0)

    def test_raising_offset_drops_zero_leads(self):
        a = S(1.0, 0.0, [0.0, 0.0, 1.0, 2.0])
        r = series_rebase(a, 2.0)
        assert r.offset == 2.0
        assert r.coeffs == (1.0, 2.0)

    def test_raising_past_nonzero_lead_raises(self):
        a = S(1.0, 0.0, [1.0, 2.0])
        with pytest.raises(AlignmentError):
            series_rebase(a, 1.0)

    def test_fractional_step_raises(self):
        a = S(1.0, 0.0, [1.0])
        with pytest.raises(AlignmentError):
            series_rebase(a, 0.25)

    def test_preserves_represented_function(self):
        a = S(0.5, 1.0, [1.0, -0.5, 0.25])
        r = series_rebase(a, -1.0)
        for x in (0.5, 1.0, 3.0):
            assert eval_series(r, x).value == pytest.approx(
                eval_series(a, x).value, rel=1e-15)


class TestConformableDiffExact:
    def test_constant_series_maps_to_zero(self):
        d = conformable_diff_exact(S(0.5, 0.0, [7.0]))
        assert d.coeffs == (0.0,)
        assert d.offset == -1.0

    def test_power_rule_on_x_alpha(self):
        # x**alpha differentiates to the constant alpha
        d = conformable_diff_exact(S(0.3, 1.0, [1.0]))
        assert d.offset == 0.0
        assert d.coeffs == (0.3,)

    @pytest.mark.parametrize("k", [0, 1, 2, 5])
    def test_power_rule_on_monomials(self, k):
        coeffs = [0.0] * (k + 1)
        coeffs[k] = 1.0
        d = conformable_diff_exact(S(0.6, 0.0, coeffs))
        assert d.coeffs[k] == pytest.approx(0.6 * k)
        assert sum(1 for c in d.coeffs if c != 0.0) == (0 if k == 0 else 1)

    def test_second_application_coefficient_formula(self):
        # twice-differentiated coefficients are alpha**2 (n+r)(n+r-1) c_n
        a = S(0.5, 0.25, [1.0, 2.0, 3.0])
        d2 = conformable_diff_exact(conformable_diff_exact(a))
        assert d2.offset == pytest.approx(0.25 - 2.0)
        for n, c in enumerate(a.coeffs):
            e = n + 0.25
            assert d2.coeffs[n] == pytest.approx(0.25 * e * (e - 1.0) * c)

    def test_scale_commutes_exactly_for_powers_of_two(self):
        a = S(0.7, 0.5, [1.0, -0.3, 0.07])
        lhs = conformable_diff_exact(series_scale(a, 4.0))
        rhs = series_scale(conformable_diff_exact(a), 4.0)
        assert lhs.coeffs == rhs.coeffs


class TestEvalSeries:
    def test_rejects_bad_x(self):
        a = S(1.0, 0.0, [1.0])
        for bad in (0.0, -1.0, float("nan"), float("inf")):
            with pytest.raises(DomainError):
                eval_series(a, bad)

    def test_near_origin_leading_term_dominates(self):
        a = S(1.0, 0.0, [1.0, 0.0, -0.25])
        assert eval_series(a, 1e-8).value == pytest.approx(1.0, abs=1e-15)

    def test_polynomial_value(self):
        # alpha=1, offset=0: plain polynomial in x
        a = S(1.0, 0.0, [1.0, 2.0, 3.0])
        assert eval_series(a, 2.0).value == pytest.approx(1 + 4 + 12, rel=1e-15)

    def test_early_stop_reports_fewer_terms(self):
        j0 = bessel_j_series(0.0, 1.0, 60)
        res = eval_series(j0, 0.5)
        assert res.terms_used < 60
        assert res.tail_estimate < 1e-16

    def test_stop_rel_zero_uses_all_terms(self):
        j0 = bessel_j_series(0.0, 1.0, 60)
        res = eval_series(j0, 0.5, stop_rel=0.0)
        assert res.terms_used == 60

    def test_early_stop_does_not_change_value_materially(self):
        j0 = bessel_j_series(0.0, 1.0, 60)
        eager = eval_series(j0, 2.0)
        full = eval_series(j0, 2.0, stop_rel=0.0)
        assert eager.value == pytest.approx(full.value, rel=1e-14)

    def test_tail_soundness_on_alternating_series(self):
        # extending the truncation moves the value by less than the
        # reported tail estimate, for x**alpha <= 2
        full = bessel_j_series(0.0, 1.0, 60)
        for n in (8, 10, 12):
            trunc = S(1.0, 0.0, full.coeffs[:n])
            for x in (0.5, 1.0, 2.0):
                longer = S(1.0, 0.0, full.coeffs[:n + 5])
                res = eval_series(trunc, x, stop_rel=0.0)
                drift = abs(eval_series(longer, x, stop_rel=0.0).value
                            - res.value)
                assert drift <= res.tail_estimate

    def test_negative_offset_singularity_growth(self):
        a = S(0.5, -1.0, [1.0])
        assert eval_series(a, 0.25).value == pytest.approx(0.25 ** -0.5)


class TestLogSolution:
    def test_alpha_agreement_enforced(self):
        with pytest.raises(AlignmentError):
            LogSolution(S(0.5, 0.0, [1.0]), S(0.75, 0.0, [1.0]))

    def test_zero_log_part_reduces_to_plain(self):
        sol = LogSolution(S(1.0, 0.0, [0.0]), S(1.0, 0.0, [1.0, 2.0]))
        for x in (0.5, 3.0):
            assert eval_log_solution(sol, x).value == pytest.approx(
                eval_series(sol.plain_part, x).value, rel=1e-15)

    def test_at_one_log_term_vanishes(self):
        sol = LogSolution(S(1.0, 0.0, [5.0]), S(1.0, 0.0, [1.0, 2.0]))
        assert eval_log_solution(sol, 1.0).value == pytest.approx(3.0)

    def test_combines_value_terms_and_tail(self):
        lg = S(1.0, 0.0, [1.0, 1.0, 1.0])
        pl = S(1.0, 0.0, [1.0])
        sol = LogSolution(lg, pl)
        res = eval_log_solution(sol, 2.0)
        assert res.value == pytest.approx(7.0 * math.log(2.0) + 1.0, rel=1e-15)
        assert res.terms_used == 3

    def test_rejects_non_positive_x(self):
        sol = LogSolution(S(1.0, 0.0, [1.0]), S(1.0, 0.0, [1.0]))
        with pytest.raises(DomainError):
            eval_log_solution(sol, 0.0)


coeff_lists = st.lists(
    st.floats(min_value=-10.0, max_value=10.0, allow_nan=False),
    min_size=1, max_size=8)


class TestProperties:
    @settings(max_examples=60, deadline=None)
    @given(a=coeff_lists, b=coeff_lists,
           alpha=st.floats(min_value=0.1, max_value=1.0),
           x=st.floats(min_value=0.3, max_value=2.0))
    def test_evaluation_is_linear_in_coefficients(self, a, b, alpha, x):
        sa = S(alpha, 0.0, a)
        sb = S(alpha, 0.0, b)
        lhs = eval_series(series_add(sa, sb), x, stop_rel=0.0).value
        rhs = eval_series(sa, x, stop_rel=0.0).value \
            + eval_series(sb, x, stop_rel=0.0).value
        majorant = sum(abs(c) * x ** (n * alpha)
                       for n, c in enumerate(a + b))
        assert abs(lhs - rhs) <= 1e-13 * majorant + 1e-300

    @settings(max_examples=60, deadline=None)
    @given(a=coeff_lists, b=coeff_lists,
           alpha=st.floats(min_value=0.1, max_value=1.0),
           offset=st.sampled_from([0.0, 0.5, 1.0, -0.5]))
    def test_differentiation_is_linear(self, a, b, alpha, offset):
        sa = S(alpha, offset, a)
        sb = S(alpha, offset, b)
        lhs = conformable_diff_exact(series_add(sa, sb))
        rhs = series_add(conformable_diff_exact(sa),
                         conformable_diff_exact(sb))
        assert lhs.offset == rhs.offset
        for n, (l, r) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
            slack = 4e-16 * abs(alpha * (n + offset)) * (
                abs(sa.coeffs[n] if n < len(sa.coeffs) else 0.0)
                + abs(sb.coeffs[n] if n < len(sb.coeffs) else 0.0))
            assert abs(l - r) <= slack + 1e-300

    @settings(max_examples=40, deadline=None)
    @given(m=st.integers(min_value=0, max_value=3),
           alpha=st.floats(min_value=0.2, max_value=1.0),
           x=st.floats(min_value=0.3, max_value=3.0))
    def test_integer_shift_matches_power_multiplication(self, m, alpha, x):
        a = S(alpha, 0.0, [1.0, -0.5, 0.25, -0.125])
        lhs = eval_series(series_shift(a, m), x).value
        rhs = x ** (m * alpha) * eval_series(a, x).value
        assert lhs == pytest.approx(rhs, rel=5e-15, abs=1e-300)
