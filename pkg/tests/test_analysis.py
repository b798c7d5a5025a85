"""Unit tests for quadrature, root finding and the constant registry."""

import math

import pytest

from gemini_dilog import analysis
from gemini_dilog.analysis import (
    POSITIVE_INFINITY,
    ZERO_LOG_SINGULAR,
    BracketError,
    NamedConstant,
    QuadratureSpec,
    constant_by_id,
    constants_table,
    find_root,
    integrate,
    solve_constant,
    solve_nstep,
    solve_trinomial,
)


class TestIntegrate:
    def test_finite_interval(self):
        got = integrate(math.sin, QuadratureSpec(lower=0.0, upper=math.pi))
        assert got == pytest.approx(2.0, abs=1e-12)

    def test_semi_infinite(self):
        got = integrate(lambda x: math.exp(-x) * x, QuadratureSpec())
        assert got == pytest.approx(1.0, abs=1e-12)

    def test_log_singularity_at_zero(self):
        # int_0^1 ln(1/x) dx = 1
        got = integrate(lambda x: -math.log(x),
                        QuadratureSpec(lower=ZERO_LOG_SINGULAR, upper=1.0))
        assert got == pytest.approx(1.0, abs=1e-11)

    def test_log_singularity_infinite_upper(self):
        # int_0^inf ln(1/(1-e^{-x})) dx = pi^2/6
        f = lambda x: -math.log(-math.expm1(-x))
        got = integrate(f, QuadratureSpec(lower=ZERO_LOG_SINGULAR,
                                          upper=POSITIVE_INFINITY))
        assert got == pytest.approx(math.pi ** 2 / 6.0, abs=1e-10)

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            QuadratureSpec(abs_tol=-1.0)
        with pytest.raises(ValueError):
            QuadratureSpec(max_depth=3)


class TestFindRoot:
    def test_simple_root(self):
        assert find_root(lambda x: x * x - 2.0, 1.0, 2.0) == pytest.approx(
            math.sqrt(2.0), abs=1e-13)

    def test_endpoint_root(self):
        assert find_root(lambda x: x - 1.0, 1.0, 2.0) == 1.0

    def test_no_sign_change(self):
        with pytest.raises(BracketError):
            find_root(lambda x: x * x + 1.0, -1.0, 1.0)

    def test_deterministic(self):
        f = lambda x: math.cos(x) - x
        assert find_root(f, 0.0, 1.0) == find_root(f, 0.0, 1.0)


class TestAlgebraicSolvers:
    def test_trinomial_golden_ratio(self):
        phi = (1.0 + math.sqrt(5.0)) / 2.0
        assert solve_trinomial(2, 1) == pytest.approx(phi, abs=1e-13)

    def test_trinomial_back_substitutes(self):
        for n, m in ((3, 1), (3, 2), (4, 1), (4, 3), (5, 4)):
            x = solve_trinomial(n, m)
            assert abs(x ** n - x ** m - 1.0) < 1e-12

    def test_trinomial_domain(self):
        with pytest.raises(ValueError):
            solve_trinomial(1, 2)

    def test_nbonacci_limits(self):
        # N-bonacci constants increase toward 2, N-addinacci decrease toward 2
        prev = 0.0
        for N in (2, 3, 4, 5, 10):
            x = solve_nstep(N, "minus")
            assert prev < x < 2.0
            prev = x
        prev = 3.0
        for N in (2, 3, 4, 5, 10):
            x = solve_nstep(N, "plus")
            assert 2.0 < x < prev
            prev = x

    def test_nstep_tribonacci(self):
        # 3-bonacci root of x^4 - 2x^3 + 1 factors through the tribonacci cubic
        x = solve_nstep(3, "minus")
        assert abs(x ** 3 - x * x - x - 1.0) < 1e-12

    def test_nstep_validation(self):
        with pytest.raises(ValueError):
            solve_nstep(1, "minus")
        with pytest.raises(ValueError):
            solve_nstep(3, "times")


class TestConstantRegistry:
    def test_ids_unique(self):
        ids = [c.id for c in constants_table()]
        assert len(ids) == len(set(ids))

    def test_lookup(self):
        assert constant_by_id("phi").reference_value == pytest.approx(1.618034)
        with pytest.raises(KeyError):
            constant_by_id("no-such-constant")

    def test_provenance_tags(self):
        assert {c.provenance for c in constants_table()} == {"PAPER", "DERIVED"}

    def test_every_constant_back_substitutes(self):
        for c in constants_table():
            x = solve_constant(c)
            assert abs(c.fn(x)) < 1e-12, c.id

    def test_reference_values_six_decimals(self):
        for c in constants_table():
            x = solve_constant(c)
            assert x == pytest.approx(c.reference_value, abs=1e-5), c.id

    def test_known_roots(self):
        assert solve_constant(constant_by_id("phi")) == pytest.approx(
            (1.0 + math.sqrt(5.0)) / 2.0, abs=1e-13)
        assert solve_constant(constant_by_id("infinacci")) == pytest.approx(
            2.0, abs=1e-13)
        assert solve_constant(constant_by_id("delta_s")) == pytest.approx(
            math.log(1.0 + math.sqrt(2.0)), abs=1e-13)
        assert solve_constant(constant_by_id("magic_angle")) == pytest.approx(
            math.atan(math.sqrt(2.0)), abs=1e-13)

    def test_table_is_immutable_sequence(self):
        t = constants_table()
        assert t is constants_table()
        with pytest.raises(TypeError):
            t[0] = NamedConstant("x", "x = 0", lambda x: x, (-1.0, 1.0), 0.0,
                                 "DERIVED")
