"""The gemini function family and its geometric quantities.

The generalized gemini function is

    g_a^b(x) = b * ln((1 + a*e^{-x/b}) / (1 - e^{-x/b})),   x > 0,

with shape factor a >= -1 and scale factor b > 0.  Every member is
self-inverse; a = 1 is the fundamental form and a = 0 the degenerate form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .analysis import BracketError, find_root
from .polylog import PI2_6, li2_real

__all__ = [
    "GeminiParams",
    "AreaDecomposition",
    "value",
    "antiderivative",
    "area_between",
    "total_area",
    "fixed_point",
    "symmetric_partner",
    "area_decomposition",
    "area_ratio_r",
    "area_ratio_rxa",
    "median",
    "median_rule_residuals",
    "rotated_degenerate",
    "rotated_antiderivative",
    "inverse_pair_prediction",
    "inverse_pair_solve_a",
    "scale_fit",
    "atot_of_a_p",
    "critical_a",
    "A_of_p",
]


@dataclass(frozen=True)
class GeminiParams:
    """Shape factor a and scale factor b of one gemini function."""

    a: float
    b: float = 1.0

    def __post_init__(self) -> None:
        if not (self.a >= -1.0):
            raise ValueError("shape factor must satisfy a >= -1")
        if not (self.b > 0.0):
            raise ValueError("scale factor must be positive")


@dataclass(frozen=True)
class AreaDecomposition:
    """Area sections of a gemini function decomposed at the fixed point."""

    total: float
    middle_square: float
    apex: float
    rectangle: float
    between_limits: float


def _li2r(x: float) -> float:
    return li2_real(x).real


def value(p: GeminiParams, x: float) -> float:
    """g_a^b(x) for x > 0."""
    if not (x > 0.0):
        raise ValueError("gemini functions are defined for x > 0")
    u = x / p.b
    e = math.exp(-u)
    # log1p/expm1 forms keep the small-x blow-up well conditioned
    return p.b * (math.log1p(p.a * e) - math.log(-math.expm1(-u)))


def antiderivative(p: GeminiParams, x: float) -> float:
    """F(x) = b^2 [Li2(-a e^{-x/b}) - Li2(e^{-x/b})]; F' = value, F(inf) = 0."""
    if x < 0.0:
        raise ValueError("antiderivative is used on x >= 0")
    e = math.exp(-x / p.b)
    return p.b * p.b * (_li2r(-p.a * e) - _li2r(e))


def area_between(p: GeminiParams, x1: float, x2: float) -> float:
    """Signed area under the curve between x1 and x2."""
    return antiderivative(p, x2) - antiderivative(p, x1)


def total_area(p: GeminiParams) -> float:
    """b^2 (pi^2/6 - Li2(-a)); zero in the completely degenerate case a = -1."""
    return p.b * p.b * (PI2_6 - _li2r(-p.a))


def fixed_point(a: float) -> float:
    """x0 = ln(1 + sqrt(1+a))."""
    if a < -1.0:
        raise ValueError("shape factor must satisfy a >= -1")
    return math.log(1.0 + math.sqrt(1.0 + a))


def symmetric_partner(a: float, x1: float) -> float:
    """x2 = ln((X+a)/(X-1)) with X = e^{x1}; an involution in x1."""
    X = math.exp(x1)
    if X <= 1.0 + 1e-12:
        raise ValueError("symmetric partner needs e^{x1} > 1")
    return math.log((X + a) / (X - 1.0))


def area_decomposition(a: float) -> AreaDecomposition:
    """Decompose the total area at the fixed point: A_tot = A0 + 2 A_a."""
    if a < -1.0:
        raise ValueError("shape factor must satisfy a >= -1")
    total = PI2_6 - _li2r(-a)
    x0 = fixed_point(a)
    middle = x0 * x0
    apex = 0.5 * (total - middle)
    # at the fixed point the symmetric limits coincide: the rectangle is the
    # middle square itself and no area is left between the limits
    return AreaDecomposition(total=total, middle_square=middle, apex=apex,
                             rectangle=middle, between_limits=0.0)


def area_ratio_r(a: float) -> float:
    """r(a) = A_tot/A0 = (pi^2/6 - Li2(-a)) / ln^2(1+sqrt(1+a)), a > -1."""
    if not (a > -1.0):
        raise ValueError("area ratio requires a > -1")
    return (PI2_6 - _li2r(-a)) / fixed_point(a) ** 2


def area_ratio_rxa(x: float, a: float) -> float:
    """The two-parameter area ratio r(x, a) on 1 < x < 1 + sqrt(1+a)."""
    if a < -1.0:
        raise ValueError("shape factor must satisfy a >= -1")
    if not (1.0 < x < 1.0 + math.sqrt(1.0 + a)):
        raise ValueError("x must lie in (1, 1+sqrt(1+a))")
    num = _li2r(-a) - PI2_6
    den = (
        PI2_6
        - math.log(x) * math.log((x + a) / (x - 1.0))
        - _li2r(-a)
        - 2.0 * _li2r(1.0 / x)
        + 2.0 * _li2r(-a / x)
    )
    return num / den


def _median_halfarea_residual(m: float, a: float) -> float:
    # tail area from ln(m): Li2(1/m) - Li2(-a/m), half total: pi^2/12 - Li2(-a)/2
    return _li2r(1.0 / m) - _li2r(-a / m) - (PI2_6 / 2.0 - 0.5 * _li2r(-a))


def median(a: float) -> float:
    """ln(m) splitting the total area in half: Li2(1/m) - Li2(-a/m) = A_tot/2."""
    if not (a > -1.0):
        raise ValueError("median requires a > -1")
    f = lambda m: _median_halfarea_residual(m, a)
    lo = 1.0 + 1e-9
    hi = 2.0
    while f(hi) > 0.0:
        hi *= 2.0
        if hi > 1e12:
            raise BracketError("median bracket expansion failed")
    return math.log(find_root(f, lo, hi))


def median_rule_residuals(a: float) -> tuple:
    """Residuals of the two median rules: (A_c - A_r, A_half - A0/2)."""
    p = GeminiParams(a)
    x1 = median(a)
    x2 = symmetric_partner(a, x1)
    rule1 = area_between(p, x1, x2) - x1 * x2
    x0 = fixed_point(a)
    rule2 = area_between(p, x1, x0) - 0.5 * x0 * x0
    return (rule1, rule2)


_SQRT2 = math.sqrt(2.0)


def rotated_degenerate(x: float) -> float:
    """The degenerate form rotated by 45 degrees: (1/sqrt2) ln(2cosh(x sqrt2)+2)."""
    # even in x; write via |x| to avoid cosh overflow asymmetry
    t = _SQRT2 * abs(x)
    return (t + 2.0 * math.log1p(math.exp(-t))) / _SQRT2


def rotated_antiderivative(x: float) -> float:
    """Antiderivative Li2(-e^{-x sqrt2}) + x^2/2 of the rotated degenerate form."""
    return _li2r(-math.exp(-_SQRT2 * x)) + 0.5 * x * x


def inverse_pair_prediction(n: float) -> tuple:
    """Coefficient pairs ((A, B), (A', B')) such that

    Li2(-a)   = A  * pi^2/6 + B  * ln^2(a)
    Li2(-1/a) = A' * pi^2/6 + B' * ln^2(a)

    for the inverse gemini pair with area ratio parameter n > 0.
    """
    if not (n > 0.0):
        raise ValueError("n must be positive")
    c1 = (-(2.0 * n - 1.0) / (n + 1.0), -0.5 * n / (n + 1.0))
    c2 = ((n - 2.0) / (n + 1.0), -0.5 / (n + 1.0))
    return (c1, c2)


def inverse_pair_solve_a(n: float) -> float:
    """Solve the inverse-pair prediction for the shape factor a."""
    (A, B), _ = inverse_pair_prediction(n)
    f = lambda a: _li2r(-a) - A * PI2_6 - B * math.log(a) ** 2
    if abs(f(1.0)) < 1e-13:
        return 1.0
    hi = 2.0
    while f(hi) * f(1.0 + 1e-9) > 0.0:
        hi *= 2.0
        if hi > 1e9:
            raise BracketError("inverse-pair bracket expansion failed")
    return find_root(f, 1.0 + 1e-9, hi)


def scale_fit(a1: float, a2: float) -> float:
    """Scale factor b with total_area((a2, b)) = total_area((a1, 1))."""
    if a1 < -1.0 or not (a2 > -1.0):
        raise ValueError("need a1 >= -1 and a2 > -1")
    return math.sqrt(total_area(GeminiParams(a1)) / total_area(GeminiParams(a2)))


def atot_of_a_p(a: float, p: float) -> float:
    """Unit-height normalized total area A_tot(a, p) = (pi^2/6 - Li2(-a))/(a+p)^2."""
    if not (a > -1.0):
        raise ValueError("requires a > -1")
    return (PI2_6 - _li2r(-a)) / (a + p) ** 2


def critical_a(p: float) -> float:
    """Shape factor where the scale factor starts to dominate A_tot(a, p)."""
    def f(a: float) -> float:
        if a == 0.0:
            return 0.5 * p - PI2_6
        return _li2r(-a) - PI2_6 + (a + p) / (2.0 * a) * math.log(1.0 + a)

    if abs(f(0.0)) < 1e-13:
        return 0.0
    try:
        return find_root(f, -1.0 + 1e-9, -1e-10)
    except BracketError:
        return find_root(f, 1e-10, 1e6)


def A_of_p(p: float) -> float:
    """A(p) = pi^2/(2p) + ln^2(p-1)/(2p) for p > 1."""
    if not (p > 1.0):
        raise ValueError("A_of_p requires p > 1")
    return math.pi ** 2 / (2.0 * p) + math.log(p - 1.0) ** 2 / (2.0 * p)
