"""Drag on a rough solid approaching a flat no-slip wall.

The lubrication lower bound reduces the drag to a radial integral,

    F(h) = 6 pi * int_0^r0 r^3 / (h + gamma_s(r))^3 dr,

whose small-gap behaviour is governed by ``beta = eps * h**((alpha-1)/2)``
through the scaled integrals ``cal_I`` and ``cal_J`` below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .exceptions import DomainError
from .geometry import CORRUGATED, GapProfile, _sphere, regime_beta
from .quad import DEFAULT_CONFIG, QuadConfig, QuadResult, integrate, integrate_semi_infinite
from .results import DragEstimate, Method

SIX_PI = 6.0 * math.pi
ONE_THIRD = 1.0 / 3.0
# within this distance of alpha = 1/3 the logarithmic branch is used
LOG_BAND = 1e-3
REGIME_THRESHOLD = 1.0

# cal_I values fall like beta**-3; only relative accuracy is meaningful
RELATIVE_CONFIG = QuadConfig(abs_tol=1e-300, rel_tol=1e-10)


def _check_alpha(alpha):
    if not 0.0 <= alpha < 1.0:
        raise DomainError(f"alpha must lie in [0, 1), got {alpha}")


def _check_h(h):
    if not (h > 0.0 and math.isfinite(h)):
        raise DomainError(f"gap h must be finite and > 0, got {h}")


def _breakpoints(h, r0):
    """Split points bracketing the lubrication peak at r ~ sqrt(h)."""
    pts = [0.0]
    r = 0.1 * math.sqrt(h)
    while r < r0:
        pts.append(r)
        r *= 10.0
    pts.append(r0)
    return pts


def _integrate_pieces(f, pts, cfg):
    value = err = 0.0
    n = 0
    for lo, hi in zip(pts[:-1], pts[1:]):
        res = integrate(f, lo, hi, cfg)
        value += res.value
        err += res.err_estimate
        n += res.n_evals
    return QuadResult(value, err, n)


def drag_integral(profile: GapProfile, h, cfg: QuadConfig = DEFAULT_CONFIG) -> DragEstimate:
    """Exact lubrication integral ``6 pi int_0^r0 r^3 / (h + gamma_s)^3 dr``."""
    h = float(h)
    _check_h(h)
    if profile.kind == CORRUGATED:
        raise DomainError("drag_integral needs a smooth_sphere or rough_power profile")
    eps = profile.roughness
    exponent = 1.0 + profile.alpha

    def integrand(r):
        film = h + _sphere(r)
        if eps:
            film = film + eps * r**exponent
        return r**3 / film**3

    res = _integrate_pieces(integrand, _breakpoints(h, profile.r0), cfg)
    return DragEstimate(SIX_PI * res.value, Method.EXACT_INTEGRAL,
                        err_estimate=SIX_PI * res.err_estimate)


def cal_I(beta, alpha, cfg: QuadConfig = RELATIVE_CONFIG) -> QuadResult:
    """``int_0^inf s^3 / (1 + s^2/2 + beta s^(1+alpha))^3 ds``."""
    if beta < 0.0 or not math.isfinite(beta):
        raise DomainError(f"beta must be finite and >= 0, got {beta}")
    _check_alpha(alpha)
    exponent = 1.0 + alpha

    def integrand(s):
        return s**3 / (1.0 + 0.5 * s * s + beta * s**exponent) ** 3

    return integrate_semi_infinite(integrand, 0.0, cfg)


def cal_J(beta, h, alpha, r0=0.5, cfg: QuadConfig = DEFAULT_CONFIG) -> QuadResult:
    """Remainder integral ``int_0^(r0/sqrt h) s^7 / (1 + s^2/2 + beta s^(1+alpha))^4 ds``."""
    if beta < 0.0 or not math.isfinite(beta):
        raise DomainError(f"beta must be finite and >= 0, got {beta}")
    _check_h(h)
    _check_alpha(alpha)
    exponent = 1.0 + alpha
    upper = r0 / math.sqrt(h)

    def integrand(s):
        return s**7 / (1.0 + 0.5 * s * s + beta * s**exponent) ** 4

    pts = [0.0] + [p for p in (1.0, 10.0, 100.0, 1000.0) if p < upper] + [upper]
    return _integrate_pieces(integrand, pts, cfg)


def lambda_alpha(alpha) -> float:
    """First-order roughness coefficient, ``int_0^inf 3 s^(4+alpha) / (1 + s^2/2)^4 ds``.

    Evaluated in closed form::

        2**((alpha+1)/2) * pi * (3+alpha) * (1-alpha**2) / (8 cos(pi alpha / 2))
    """
    _check_alpha(alpha)
    return (2.0 ** ((alpha + 1.0) / 2.0) * math.pi * (3.0 + alpha) * (1.0 - alpha * alpha)
            / (8.0 * math.cos(math.pi * alpha / 2.0)))


def mu_alpha(alpha, cfg: QuadConfig = DEFAULT_CONFIG) -> float:
    """Large-roughness coefficient of ``cal_I``.

    For ``alpha < 1/3`` it is ``int_0^inf s^3 / (s^2/2 + s^(1+alpha))^3 ds``,
    for ``alpha > 1/3`` it is ``(1/(1+alpha)) int_0^inf u^((3-alpha)/(1+alpha)) / (1+u)^3 du``.
    Both diverge as ``alpha -> 1/3``. The integrals are rewritten on [0, 1]
    with substitutions that absorb the algebraic endpoint behaviour, so the
    quadrature stays accurate close to the divergence.
    """
    _check_alpha(alpha)
    if alpha == ONE_THIRD or abs(alpha - ONE_THIRD) < 1e-12:
        raise DomainError("mu_alpha is undefined at alpha = 1/3 (logarithmic case)")
    if alpha < ONE_THIRD:
        # s**(1-alpha) = 2w turns the integrand into w**(p-1) (1+w)**-3
        p = (1.0 - 3.0 * alpha) / (1.0 - alpha)
        near = integrate(lambda x: (1.0 + x ** (1.0 / p)) ** -3, 0.0, 1.0, cfg).value / p
        far = integrate(lambda y: y ** (2.0 - p) / (1.0 + y) ** 3, 0.0, 1.0, cfg).value
        return 2.0**p / (1.0 - alpha) * (near + far)
    c = (3.0 * alpha - 1.0) / (1.0 + alpha)
    q = 2.0 - c
    near = integrate(lambda u: u**q / (1.0 + u) ** 3, 0.0, 1.0, cfg).value
    far = integrate(lambda x: (1.0 + x ** (1.0 / c)) ** -3, 0.0, 1.0, cfg).value / c
    return (near + far) / (1.0 + alpha)


@lru_cache(maxsize=256)
def _mu_cached(alpha):
    return mu_alpha(alpha)


def is_log_case(alpha) -> bool:
    return abs(alpha - ONE_THIRD) < LOG_BAND


@dataclass(frozen=True)
class AlphaConstants:
    alpha: float
    lambda_alpha: float
    mu_alpha: Optional[float]

    @classmethod
    def compute(cls, alpha, cfg: QuadConfig = DEFAULT_CONFIG):
        mu = None if is_log_case(alpha) else mu_alpha(alpha, cfg)
        return cls(float(alpha), lambda_alpha(alpha), mu)


def asym_drag_small_beta(h, eps, alpha) -> float:
    """``6 pi / (h + lambda_alpha eps h^((alpha+1)/2))``, valid for ``beta << 1``."""
    return SIX_PI / (h + lambda_alpha(alpha) * eps * h ** ((alpha + 1.0) / 2.0))


def asym_drag_large_beta(h, eps, alpha):
    """Leading large-``beta`` drag; returns ``(value, branch_name)``."""
    if eps <= 0.0:
        raise DomainError("large-beta formulas need eps > 0")
    if is_log_case(alpha):
        return 4.5 * math.pi * abs(math.log(h)) / eps**3, "log"
    mu = _mu_cached(float(alpha))
    if alpha > ONE_THIRD:
        value = (SIX_PI * mu * eps ** (-4.0 / (1.0 + alpha))
                 * h ** (-(3.0 * alpha - 1.0) / (alpha + 1.0)))
        return value, "power_high_alpha"
    return SIX_PI * mu * eps ** (-2.0 / (1.0 - alpha)), "power_low_alpha"


def asym_drag(h, eps, alpha) -> DragEstimate:
    """Closed-form drag, switching formulas at ``beta = 1``."""
    h = float(h)
    beta = regime_beta(h, eps, alpha)
    if beta <= REGIME_THRESHOLD:
        return DragEstimate(asym_drag_small_beta(h, eps, alpha), Method.ASYMPTOTIC,
                            regime=beta, branch="small_beta")
    value, branch = asym_drag_large_beta(h, eps, alpha)
    return DragEstimate(value, Method.ASYMPTOTIC, regime=beta, branch=branch)
