"""Unit tests for the special-function evaluators."""

import cmath
import math

import mpmath
import pytest

from gemini_dilog import polylog

PHI = (1.0 + math.sqrt(5.0)) / 2.0
LPHI = math.log(PHI)
PI2 = math.pi ** 2


def mp_li2(x):
    return complex(mpmath.polylog(2, x))


class TestLi2Real:
    def test_defining_series_small_args(self):
        # brute-force partial sums as the oracle inside the disk
        for x in (-0.49, -0.2, 0.01, 0.3, 0.49):
            ref = sum(x ** k / k ** 2 for k in range(1, 200))
            assert polylog.li2_real(x).real == pytest.approx(ref, abs=1e-14)

    @pytest.mark.parametrize("x", [-50.0, -3.0, -1.0, -0.7, 0.25, 0.5, 0.75,
                                   0.99, 1.0])
    def test_against_mpmath(self, x):
        assert polylog.li2_real(x).real == pytest.approx(
            mp_li2(x).real, abs=2e-15)
        assert polylog.li2_real(x).imag == 0.0

    @pytest.mark.parametrize("x", [1.001, 1.5, 2.0, 7.0, 1e3])
    def test_lower_lip_above_one(self, x):
        # lower lip of the cut: conjugate of mpmath's principal value
        ref = mp_li2(x).conjugate()
        z = polylog.li2_real(x)
        assert z.real == pytest.approx(ref.real, abs=1e-13)
        assert z.imag == pytest.approx(-math.pi * math.log(x), abs=1e-13)

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            polylog.li2_real(math.inf)
        with pytest.raises(ValueError):
            polylog.li2_real(math.nan)


class TestLi2Complex:
    POINTS = [0.3 + 0.4j, -0.2 + 0.9j, 0.5 + 0.5j, -3.0 + 2.0j, 1.5 - 0.25j,
              0.1 - 2.0j, 4.0 + 1e-3j]

    @pytest.mark.parametrize("z", POINTS)
    def test_against_mpmath(self, z):
        assert abs(polylog.li2_complex(z) - mp_li2(z)) < 5e-14

    @pytest.mark.parametrize("z", POINTS)
    def test_conjugation_symmetry(self, z):
        a = polylog.li2_complex(z.conjugate())
        b = polylog.li2_complex(z).conjugate()
        assert abs(a - b) < 5e-14

    def test_real_axis_matches_li2_real(self):
        for x in (-2.0, 0.4, 0.9, 2.5):
            assert polylog.li2_complex(complex(x)) == polylog.li2_real(x)


class TestLi3:
    @pytest.mark.parametrize("x", [-30.0, -1.0, -0.6, -0.4, 0.0, 0.3, 0.5,
                                   0.8, 0.99, 1.0])
    def test_against_mpmath(self, x):
        assert polylog.li3_real(x) == pytest.approx(
            float(mpmath.polylog(3, x)), abs=3e-15)

    def test_domain(self):
        with pytest.raises(ValueError):
            polylog.li3_real(1.5)


class TestChi2:
    def test_closed_form_at_one(self):
        assert polylog.chi2(1.0) == pytest.approx(PI2 / 8.0, abs=1e-15)

    def test_odd(self):
        for x in (0.1, 0.5, 0.9):
            assert polylog.chi2(-x) == pytest.approx(-polylog.chi2(x), abs=1e-15)

    def test_sqrt2_minus_1(self):
        # chi2(sqrt2 - 1) = pi^2/16 - ln^2(sqrt2+1)/4
        x = math.sqrt(2.0) - 1.0
        ref = PI2 / 16.0 - math.log(math.sqrt(2.0) + 1.0) ** 2 / 4.0
        assert polylog.chi2(x) == pytest.approx(ref, abs=1e-14)

    def test_domain(self):
        with pytest.raises(ValueError):
            polylog.chi2(1.2)


class TestClausen:
    def test_series_oracle(self):
        # Cl2(t) = sum sin(kt)/k^2, slowly convergent but fine at 1e-9
        t = 1.3
        ref = sum(math.sin(k * t) / k ** 2 for k in range(1, 2_000_000))
        assert polylog.clausen_cl2(t) == pytest.approx(ref, abs=1e-9)

    def test_odd_and_periodic(self):
        t = 0.7
        c = polylog.clausen_cl2(t)
        assert polylog.clausen_cl2(-t) == pytest.approx(-c, abs=1e-14)
        assert polylog.clausen_cl2(t + 2.0 * math.pi) == pytest.approx(c, abs=1e-13)

    def test_zeros(self):
        assert polylog.clausen_cl2(0.0) == 0.0
        assert polylog.clausen_cl2(math.pi) == 0.0

    def test_maximum_at_pi_third(self):
        assert polylog.clausen_cl2(math.pi / 3.0) == pytest.approx(
            polylog.gieseking(), abs=1e-14)


class TestTrigamma:
    @pytest.mark.parametrize("x", [0.1, 0.25, 0.5, 1.0, 1.5, 3.0, 10.5, 100.0])
    def test_against_mpmath(self, x):
        assert polylog.trigamma(x) == pytest.approx(
            float(mpmath.polygamma(1, x)), rel=1e-14)

    def test_reflection(self):
        # psi1(x) + psi1(1-x) = pi^2/sin^2(pi x)
        for x in (0.1, 0.3, 0.45):
            lhs = polylog.trigamma(x) + polylog.trigamma(1.0 - x)
            assert lhs == pytest.approx(PI2 / math.sin(math.pi * x) ** 2,
                                        rel=1e-13)

    def test_domain(self):
        with pytest.raises(ValueError):
            polylog.trigamma(0.0)


class TestUnitCircle:
    @pytest.mark.parametrize("p,q", [(1, 2), (1, 3), (2, 3), (1, 5), (3, 5),
                                     (1, 6), (-1, 4), (7, 4)])
    def test_against_direct_evaluation(self, p, q):
        z = cmath.exp(1j * math.pi * p / q)
        ref = mp_li2(z)
        got = polylog.li2_unit_circle(p, q)
        assert abs(got - ref) < 1e-13

    def test_li2_i(self):
        got = polylog.li2_unit_circle(1, 2)
        assert got.real == pytest.approx(-PI2 / 48.0, abs=1e-15)
        assert got.imag == pytest.approx(polylog.catalan(), abs=1e-14)

    def test_q_zero_rejected(self):
        with pytest.raises(ValueError):
            polylog.li2_unit_circle(1, 0)


class TestConstants:
    def test_catalan_series(self):
        ref = sum((-1) ** k / (2 * k + 1) ** 2 for k in range(2_000_000))
        # alternating tail bound ~6e-14; the stored value is much closer
        assert polylog.catalan() == pytest.approx(ref, abs=1e-13)

    def test_gieseking_value(self):
        assert polylog.gieseking() == pytest.approx(
            float(mpmath.clsin(2, mpmath.pi / 3)), abs=1e-15)

    def test_zeta3(self):
        assert polylog.zeta3() == pytest.approx(1.2020569031595943, abs=1e-15)

    def test_zeta_domain(self):
        with pytest.raises(ValueError):
            polylog.zeta_fn(1.0)
        with pytest.raises(ValueError):
            polylog.gamma_fn(0.0)


class TestEvalOptions:
    def test_validation(self):
        with pytest.raises(ValueError):
            polylog.EvalOptions(abs_tol=0.0)
        with pytest.raises(ValueError):
            polylog.EvalOptions(max_terms=2)

    def test_loose_tolerance_still_sane(self):
        opts = polylog.EvalOptions(abs_tol=1e-8)
        assert polylog.li2_real(0.5, opts).real == pytest.approx(
            PI2 / 12.0 - math.log(2.0) ** 2 / 2.0, abs=1e-7)
