"""Unit tests for the gemini function family."""

import math

import numpy as np
import pytest

from gemini_dilog import gemini
from gemini_dilog.analysis import (
    POSITIVE_INFINITY,
    ZERO_LOG_SINGULAR,
    QuadratureSpec,
    integrate,
)
from gemini_dilog.gemini import GeminiParams

PHI = (1.0 + math.sqrt(5.0)) / 2.0

SHAPE_FACTORS = (-0.999, -0.5, -1.0 / PHI ** 2, 0.0, 0.3, 1.0, 2.0, 10.0)


def grid(lo, hi, n=64):
    return np.geomspace(lo, hi, n)


class TestValue:
    def test_self_inverse(self):
        # g(g(x)) = x on a log grid, for every shape factor
        for a in SHAPE_FACTORS:
            p = GeminiParams(a)
            for x in grid(1e-3, 20.0):
                y = gemini.value(p, float(x))
                if y <= 1e-8:  # nothing to invert (or hopelessly ill-conditioned)
                    continue
                assert gemini.value(p, y) == pytest.approx(float(x), rel=1e-9,
                                                           abs=1e-10)

    def test_scale_factor(self):
        # g_a^b(x) = b * g_a^1(x/b)
        p = GeminiParams(0.7, 2.5)
        for x in grid(1e-2, 30.0):
            ref = 2.5 * gemini.value(GeminiParams(0.7), float(x) / 2.5)
            assert gemini.value(p, float(x)) == pytest.approx(ref, rel=1e-13)

    def test_fundamental_form(self):
        # a = 1: g(x) = ln(coth(x/2))
        p = GeminiParams(1.0)
        for x in grid(1e-2, 10.0):
            assert gemini.value(p, float(x)) == pytest.approx(
                math.log(1.0 / math.tanh(float(x) / 2.0)), rel=1e-13)

    def test_domain(self):
        with pytest.raises(ValueError):
            gemini.value(GeminiParams(1.0), 0.0)
        with pytest.raises(ValueError):
            GeminiParams(-1.5)
        with pytest.raises(ValueError):
            GeminiParams(1.0, 0.0)


class TestAntiderivative:
    def test_derivative_consistency(self):
        # central difference of F reproduces g to ~h^2
        h = 1e-6
        for a in SHAPE_FACTORS:
            p = GeminiParams(a)
            for x in grid(0.05, 10.0, 32):
                x = float(x)
                num = (gemini.antiderivative(p, x + h)
                       - gemini.antiderivative(p, x - h)) / (2.0 * h)
                assert num == pytest.approx(gemini.value(p, x), rel=1e-7,
                                            abs=1e-9)

    def test_vanishes_at_infinity(self):
        assert gemini.antiderivative(GeminiParams(1.0), 50.0) == pytest.approx(
            0.0, abs=1e-20)

    def test_total_area_is_area_from_zero(self):
        for a in SHAPE_FACTORS:
            p = GeminiParams(a)
            assert -gemini.antiderivative(p, 0.0) == pytest.approx(
                gemini.total_area(p), rel=1e-13)

    def test_total_area_against_quadrature(self):
        for a in (-0.5, 0.0, 1.0, 5.0):
            p = GeminiParams(a)
            q = integrate(lambda x: gemini.value(p, x),
                          QuadratureSpec(lower=ZERO_LOG_SINGULAR,
                                         upper=POSITIVE_INFINITY, abs_tol=1e-10))
            assert gemini.total_area(p) == pytest.approx(q, abs=1e-9)

    def test_degenerate_edge(self):
        # a = -1 collapses the area to zero
        assert gemini.total_area(GeminiParams(-1.0)) == pytest.approx(0.0,
                                                                      abs=1e-15)


class TestFixedPoint:
    def test_on_curve(self):
        for a in SHAPE_FACTORS:
            x0 = gemini.fixed_point(a)
            assert gemini.value(GeminiParams(a), x0) == pytest.approx(x0,
                                                                      rel=1e-12)

    def test_fundamental_value(self):
        assert gemini.fixed_point(1.0) == pytest.approx(
            math.log(1.0 + math.sqrt(2.0)), abs=1e-15)

    def test_symmetric_partner_involution(self):
        for a in (0.0, 0.5, 1.0, 3.0):
            for x1 in (0.05, 0.2, 0.7):
                x2 = gemini.symmetric_partner(a, x1)
                assert gemini.symmetric_partner(a, x2) == pytest.approx(
                    x1, rel=1e-10)

    def test_partner_fixes_fixed_point(self):
        a = 0.8
        x0 = gemini.fixed_point(a)
        assert gemini.symmetric_partner(a, x0) == pytest.approx(x0, rel=1e-12)


class TestAreaDecomposition:
    def test_parts_sum(self):
        for a in SHAPE_FACTORS:
            d = gemini.area_decomposition(a)
            assert d.middle_square + 2.0 * d.apex == pytest.approx(d.total,
                                                                   rel=1e-12)
            assert d.rectangle == d.middle_square
            assert d.between_limits == 0.0

    def test_apex_symmetry(self):
        # area above the middle square equals the tail area beyond x0
        for a in (-0.5, 0.0, 1.0, 4.0):
            p = GeminiParams(a)
            x0 = gemini.fixed_point(a)
            left = integrate(lambda x: gemini.value(p, x) - x0,
                             QuadratureSpec(lower=ZERO_LOG_SINGULAR, upper=x0,
                                            abs_tol=1e-10))
            right = integrate(lambda x: gemini.value(p, x),
                              QuadratureSpec(lower=x0, upper=POSITIVE_INFINITY,
                                             abs_tol=1e-10))
            assert left == pytest.approx(right, abs=1e-9)
            assert gemini.area_decomposition(a).apex == pytest.approx(
                right, abs=1e-9)

    def test_area_ratio_r(self):
        d = gemini.area_decomposition(1.0)
        assert gemini.area_ratio_r(1.0) == pytest.approx(
            d.total / d.middle_square, rel=1e-13)

    def test_area_ratio_rxa_special_values(self):
        # the golden abscissa gives the integer ratios 5 and 3
        assert gemini.area_ratio_rxa(PHI, 0.0) == pytest.approx(5.0, rel=1e-12)
        assert gemini.area_ratio_rxa(PHI, 1.0) == pytest.approx(3.0, rel=1e-12)
        with pytest.raises(ValueError):
            gemini.area_ratio_rxa(1.0, 1.0)


class TestMedian:
    def test_splits_area_in_half(self):
        for a in (-0.5, 0.0, 1.0, 5.0):
            p = GeminiParams(a)
            x1 = gemini.median(a)
            tail = gemini.area_between(p, x1, 60.0)
            assert tail == pytest.approx(0.5 * gemini.total_area(p), rel=1e-10)

    def test_median_rules(self):
        for a in (0.0, 0.5, 1.0, 3.0):
            r1, r2 = gemini.median_rule_residuals(a)
            assert abs(r1) < 1e-10
            assert abs(r2) < 1e-10

    def test_self_median_constant(self):
        # the shape factor whose median sits exactly at ln(a): 1.798533
        m1 = 1.798533
        assert gemini.median(m1) == pytest.approx(math.log(m1), abs=1e-5)


class TestRotatedDegenerate:
    def test_even(self):
        for x in (0.1, 1.0, 3.0):
            assert gemini.rotated_degenerate(-x) == pytest.approx(
                gemini.rotated_degenerate(x), rel=1e-14)

    def test_matches_definition(self):
        for x in (-2.0, -0.5, 0.0, 0.5, 2.0, 40.0):
            ref = math.log(2.0 * math.cosh(math.sqrt(2.0) * x) + 2.0) / math.sqrt(2.0)
            assert gemini.rotated_degenerate(x) == pytest.approx(ref, rel=1e-13)

    def test_antiderivative_consistency(self):
        h = 1e-6
        for x in (-1.5, 0.0, 0.8, 2.0):
            num = (gemini.rotated_antiderivative(x + h)
                   - gemini.rotated_antiderivative(x - h)) / (2.0 * h)
            assert num == pytest.approx(gemini.rotated_degenerate(x), abs=1e-8)


class TestInversePairs:
    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
    def test_solved_a_matches_table(self, n):
        from gemini_dilog.analysis import constant_by_id, solve_constant
        ref = solve_constant(constant_by_id(f"inverse_pair_a_n{n}"))
        assert gemini.inverse_pair_solve_a(float(n)) == pytest.approx(ref,
                                                                      abs=1e-10)

    def test_prediction_consistent(self):
        # both coefficient pairs reproduce Li2 at the solved shape factor
        from gemini_dilog.polylog import PI2_6, li2_real
        n = 3.0
        a = gemini.inverse_pair_solve_a(n)
        (A, B), (A2, B2) = gemini.inverse_pair_prediction(n)
        la2 = math.log(a) ** 2
        assert li2_real(-a).real == pytest.approx(A * PI2_6 + B * la2, abs=1e-10)
        assert li2_real(-1.0 / a).real == pytest.approx(A2 * PI2_6 + B2 * la2,
                                                        abs=1e-10)

    def test_n_one_gives_unit_shape(self):
        assert gemini.inverse_pair_solve_a(1.0) == 1.0


class TestScaleAndCritical:
    def test_scale_fit_matches_areas(self):
        b = gemini.scale_fit(1.0, 3.0)
        assert gemini.total_area(GeminiParams(3.0, b)) == pytest.approx(
            gemini.total_area(GeminiParams(1.0)), rel=1e-12)

    def test_atot_normalization(self):
        assert gemini.atot_of_a_p(1.0, 1.0) == pytest.approx(
            gemini.total_area(GeminiParams(1.0)) / 4.0, rel=1e-13)

    def test_critical_a_p2(self):
        assert gemini.critical_a(2.0) == pytest.approx(-0.514091, abs=1e-5)

    def test_A_of_p_at_two(self):
        assert gemini.A_of_p(2.0) == pytest.approx(math.pi ** 2 / 4.0,
                                                   abs=1e-15)
        with pytest.raises(ValueError):
            gemini.A_of_p(1.0)
