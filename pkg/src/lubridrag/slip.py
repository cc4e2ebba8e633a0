"""Drag on a sphere with Navier slip on the sphere and on the wall.

For each radius the film carries a cubic stream-function profile with Robin
conditions whose weights are the ratios of local film thickness to slip
length. The drag is the radial integral of the profile energy ``I1 + I2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError
from .geometry import CORRUGATED, GapProfile, _sphere, gamma_s, gamma_s_prime
from .noslip import SIX_PI, _breakpoints, _integrate_pieces
from .quad import DEFAULT_CONFIG, QuadConfig
from .results import DragEstimate, Method

# Envelope for the order-one regime: c'/h <= F <= C'/h
ORDER_ONE_LOWER = 1.0
ORDER_ONE_UPPER = SIX_PI * 1.1
HOCKING_WARN_RATIO = 0.1


@dataclass(frozen=True)
class SlipParams:
    beta_s: float
    beta_p: float

    def __post_init__(self):
        for name in ("beta_s", "beta_p"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v >= 0.0):
                raise DomainError(f"{name} must be finite and >= 0, got {v}")

    def require_positive(self):
        if self.beta_s <= 0.0 or self.beta_p <= 0.0:
            raise DomainError("slip lengths must be > 0; use the noslip model for zero slip")


@dataclass(frozen=True)
class RobinCoeffs:
    alpha_s: float
    alpha_p: float


@dataclass(frozen=True)
class CubicMinimizer:
    """``Phi(t) = c3 t^3 + c2 t^2 + c1 t`` on [0, 1]."""

    c3: float
    c2: float
    c1: float

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        return ((self.c3 * t + self.c2) * t + self.c1) * t

    def derivative(self, t, order=1):
        t = np.asarray(t, dtype=float)
        if order == 1:
            return (3.0 * self.c3 * t + 2.0 * self.c2) * t + self.c1
        if order == 2:
            return 6.0 * self.c3 * t + 2.0 * self.c2
        if order == 3:
            return np.full_like(t, 6.0 * self.c3)
        raise ValueError("order must be 1, 2 or 3")


def robin_coeffs(profile: GapProfile, h, r, sp: SlipParams) -> RobinCoeffs:
    """Local Robin weights ``(1+gamma'^2)^(3/2) H / beta_s`` and ``H / beta_p``, ``H = h + gamma_s(r)``.

    Curvature of the sphere is folded into ``beta_s``.
    """
    sp.require_positive()
    if not (h > 0.0 and math.isfinite(h)):
        raise DomainError(f"gap h must be finite and > 0, got {h}")
    film = h + float(gamma_s(profile, r))
    slope = float(gamma_s_prime(profile, r))
    return RobinCoeffs((1.0 + slope * slope) ** 1.5 * film / sp.beta_s, film / sp.beta_p)


def _denominator(a_s, a_p):
    return 12.0 + 4.0 * (a_s + a_p) + a_s * a_p


def phi_coeffs(rc: RobinCoeffs) -> CubicMinimizer:
    a_s, a_p = rc.alpha_s, rc.alpha_p
    if math.isinf(a_s) and math.isinf(a_p):
        return CubicMinimizer(-2.0, 3.0, 0.0)
    d = _denominator(a_s, a_p)
    return CubicMinimizer(
        -2.0 * (a_s + a_s * a_p + a_p) / d,
        3.0 * (2.0 + a_s) * a_p / d,
        6.0 * (2.0 + a_s) / d,
    )


def integrand_I1(rc: RobinCoeffs):
    a_s, a_p = rc.alpha_s, rc.alpha_p
    d = _denominator(a_s, a_p)
    num = (a_s**2 * a_p**2 + 5.0 * (a_s**2 * a_p + a_p**2 * a_s)
           + 4.0 * (a_s**2 + a_p**2) + 20.0 * a_s * a_p)
    return 12.0 * num / d**2


def integrand_I2(rc: RobinCoeffs):
    a_s, a_p = rc.alpha_s, rc.alpha_p
    return 144.0 * (a_s + a_p) / _denominator(a_s, a_p) ** 2


def profile_energy(a_s, a_p):
    """``I1 + I2``: minimal bending-plus-Robin energy of the cubic profile.

    Written in factored form so it stays accurate when both weights are huge
    (it tends to 12 there). Accepts arrays.
    """
    a_s = np.asarray(a_s, dtype=float)
    a_p = np.asarray(a_p, dtype=float)
    # divide numerator and denominator by (1 + a_s)^2 (1 + a_p)^2 termwise
    xs = a_s / (1.0 + a_s)
    xp = a_p / (1.0 + a_p)
    ys = 1.0 / (1.0 + a_s)
    yp = 1.0 / (1.0 + a_p)
    d = 12.0 * ys * yp + 4.0 * (xs * yp + ys * xp) + xs * xp
    num = 12.0 * (xs**2 * xp**2 + 5.0 * (xs**2 * xp * yp + xp**2 * xs * ys)
                  + 4.0 * (xs**2 * yp**2 + xp**2 * ys**2) + 20.0 * xs * xp * ys * yp)
    num = num + 144.0 * (xs * ys * yp**2 + xp * yp * ys**2)
    out = num / d**2
    return out[()] if out.ndim == 0 else out


def drag_integral_slip(profile: GapProfile, h, sp: SlipParams,
                       cfg: QuadConfig = DEFAULT_CONFIG) -> DragEstimate:
    """``(pi/2) int_0^r0 (I1 + I2) r^3 / (h + gamma_s)^3 dr``.

    Rough profiles are accepted as well; only ``gamma_s`` and its slope enter.
    """
    sp.require_positive()
    h = float(h)
    if not (h > 0.0 and math.isfinite(h)):
        raise DomainError(f"gap h must be finite and > 0, got {h}")
    if profile.kind == CORRUGATED:
        raise DomainError("drag_integral_slip needs a smooth_sphere or rough_power profile")
    eps = profile.roughness
    a = profile.alpha

    def integrand(r):
        film = h + _sphere(r)
        slope = r / np.sqrt(1.0 - r * r)
        if eps:
            film = film + eps * r ** (1.0 + a)
            slope = slope + eps * (1.0 + a) * (r**a if a else 1.0)
        a_s = (1.0 + slope * slope) ** 1.5 * film / sp.beta_s
        a_p = film / sp.beta_p
        return profile_energy(a_s, a_p) * r**3 / film**3

    res = _integrate_pieces(integrand, _breakpoints(h, profile.r0), cfg)
    half_pi = 0.5 * math.pi
    return DragEstimate(half_pi * res.value, Method.EXACT_INTEGRAL,
                        err_estimate=half_pi * res.err_estimate)


def hocking_asym(h, sp: SlipParams) -> DragEstimate:
    """Small-gap slip law ``pi (1/beta_s + 1/beta_p) |ln h|``."""
    sp.require_positive()
    h = float(h)
    if not (h > 0.0 and math.isfinite(h)):
        raise DomainError(f"gap h must be finite and > 0, got {h}")
    ratio = max(h / sp.beta_s, h / sp.beta_p)
    warning = None
    if ratio > HOCKING_WARN_RATIO:
        warning = f"h / slip length = {ratio:.3g} > {HOCKING_WARN_RATIO}; outside small-gap regime"
    value = math.pi * (1.0 / sp.beta_s + 1.0 / sp.beta_p) * abs(math.log(h))
    return DragEstimate(value, Method.ASYMPTOTIC, regime=ratio, branch="hocking", warning=warning)


def drag_bounds_order_one(h):
    """Envelope ``(c'/h, C'/h)`` for the regime where some ``h / slip length`` is O(1).

    Only existence of the constants is known; ``c' = 1`` and
    ``C' = 6 pi * 1.1`` are engineering choices bracketing the no-slip value.
    """
    h = float(h)
    if not (h > 0.0 and math.isfinite(h)):
        raise DomainError(f"gap h must be finite and > 0, got {h}")
    return ORDER_ONE_LOWER / h, ORDER_ONE_UPPER / h
