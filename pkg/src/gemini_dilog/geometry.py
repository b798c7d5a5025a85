"""Solids of revolution and differential geometry of geminoids.

A geminoid is the solid of revolution of a gemini function (volume taken
by cylindrical shells); its volume has the closed form
2*pi*b^3*[zeta(3) - Li3(-a)].
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .analysis import POSITIVE_INFINITY, QuadratureSpec, find_root, integrate
from .gemini import GeminiParams, value
from .polylog import gamma_fn, li3_real, zeta3, zeta_fn

__all__ = [
    "GeminoidProfile",
    "geminoid_volume",
    "geminoid_volume_quad",
    "volume_ratio",
    "raw_moment",
    "raw_moment_quad",
    "combined_zeta_gamma_residual",
    "curvature_profile",
    "equal_radii_point",
    "arcgd",
    "mamikon_area",
    "pi_hole",
]


@dataclass(frozen=True)
class GeminoidProfile:
    """Differential-geometric data of geminoid_1 at one abscissa."""

    x: float
    kappa1: float
    arc_length: float
    theta: float
    R1: float
    R2: float
    gauss_curvature: float


def geminoid_volume(p: GeminiParams) -> float:
    """V = 2*pi*b^3*[zeta(3) - Li3(-a)]."""
    return 2.0 * math.pi * p.b ** 3 * (zeta3() - li3_real(-p.a))


def geminoid_volume_quad(p: GeminiParams, tol: float = 1e-9) -> float:
    """Shell-method quadrature 2*pi * int x * g(x) dx, the volume oracle."""
    f = lambda x: 2.0 * math.pi * x * value(p, x)
    return integrate(f, QuadratureSpec(lower=0.0, upper=POSITIVE_INFINITY, abs_tol=tol))


def volume_ratio(a: float) -> float:
    """V_a over the middle-cylinder volume; tends to 8/3 as a grows."""
    if not (a > -1.0):
        raise ValueError("volume ratio requires a > -1")
    return 2.0 * (zeta3() - li3_real(-a)) / math.log(1.0 + math.sqrt(1.0 + a)) ** 3


def raw_moment(s: float) -> float:
    """int_0^inf x^s ln(1/(1-e^{-x})) dx = Gamma(s+1) * zeta(s+2), s >= 0."""
    if s < 0.0:
        raise ValueError("raw_moment requires s >= 0")
    return gamma_fn(s + 1.0) * zeta_fn(s + 2.0)


def raw_moment_quad(s: float, tol: float = 1e-10) -> float:
    """Quadrature oracle for the raw moment."""
    f = lambda x: x ** s * (-math.log(-math.expm1(-x)))
    lower = "zero-with-log-singularity" if s < 1.0 else 0.0
    return integrate(f, QuadratureSpec(lower=lower, upper=POSITIVE_INFINITY, abs_tol=tol))


def combined_zeta_gamma_residual(s: float, tol: float = 1e-9) -> float:
    """Quadrature of the combined vanishing zeta-gamma integrand, s > 1."""
    if not (s > 1.0):
        raise ValueError("requires s > 1")
    c = s * zeta_fn(s + 2.0) / zeta_fn(s)

    def f(x: float) -> float:
        e = -math.expm1(-x)  # 1 - e^{-x}, overflow-free for large x
        return c * x ** (s - 1.0) * math.exp(-x) / e - x ** s * (-math.log(e))

    return integrate(f, QuadratureSpec(lower=0.0, upper=POSITIVE_INFINITY, abs_tol=tol))


def curvature_profile(x: float) -> GeminoidProfile:
    """kappa1, arc length, tangential angle, principal radii and K_g of geminoid_1."""
    if not (x > 0.0):
        raise ValueError("curvature profile requires x > 0")
    sh, ch = math.sinh(x), math.cosh(x)
    kappa1 = sh / (ch * ch)
    arc = math.log(sh)
    theta = 2.0 * math.atan(math.tanh(0.5 * x))  # gd(x)
    lncoth = math.log(1.0 / math.tanh(0.5 * x))
    r2 = lncoth / math.tanh(x)
    kg = -sh * sh / (ch ** 3 * lncoth)
    return GeminoidProfile(x=x, kappa1=kappa1, arc_length=arc, theta=theta,
                           R1=1.0 / kappa1, R2=r2, gauss_curvature=kg)


def equal_radii_point() -> float:
    """The abscissa with |R1| = |R2|: root of ln(coth(x/2)) - cosh(x) = 0.

    Equals arcsinh(lambda) with lambda the Laplace limit.
    """
    f = lambda x: math.log(1.0 / math.tanh(0.5 * x)) - math.cosh(x)
    return find_root(f, 0.1, 2.0)


def arcgd(theta: float) -> float:
    """Inverse Gudermannian arcgd(theta) = 2*artanh(tan(theta/2))."""
    return 2.0 * math.atanh(math.tan(0.5 * theta))


def _sweep_sq(theta: float) -> float:
    # (arcgd(theta)/sin(theta))^2 with the removable singularity at 0
    t = abs(theta)
    if t < 1e-4:
        return (1.0 + t * t / 3.0) ** 2
    return (arcgd(t) / math.sin(t)) ** 2


def mamikon_area(tol: float = 1e-9) -> float:
    """Tangent-sweep area (1/2) int_0^{pi/2} (arcgd(t)/sin t)^2 dt = pi^2/4."""
    return 0.5 * integrate(_sweep_sq, QuadratureSpec(lower=0.0, upper=0.5 * math.pi, abs_tol=tol))


@dataclass(frozen=True)
class PiHole:
    volume: float
    cross_section: float
    throat: float


def pi_hole(tol: float = 1e-8) -> PiHole:
    """The pi-hole solid: volume pi^3, cross-section pi^2, throat pi."""
    sect = integrate(_sweep_sq, QuadratureSpec(lower=-0.5 * math.pi, upper=0.5 * math.pi, abs_tol=tol))
    return PiHole(volume=math.pi * sect, cross_section=sect, throat=math.pi)
