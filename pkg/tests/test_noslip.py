import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad
from scipy.special import beta as beta_fn

from lubridrag.exceptions import DomainError
from lubridrag.geometry import GapProfile
from lubridrag.noslip import (
    AlphaConstants,
    asym_drag,
    asym_drag_large_beta,
    cal_I,
    cal_J,
    drag_integral,
    lambda_alpha,
    mu_alpha,
)
from lubridrag.results import Method

SIX_PI = 6 * math.pi


def reference_drag(eps, alpha, h, r0=0.5):
    """Independent scipy quadrature of the lubrication integral."""

    def f(r):
        film = h + 1 - math.sqrt(1 - r * r) + eps * r ** (1 + alpha)
        return r**3 / film**3

    pts = [math.sqrt(h) * k for k in (0.3, 1.0, 3.0, 10.0) if math.sqrt(h) * k < r0]
    return SIX_PI * quad(f, 0.0, r0, points=pts, epsabs=0, epsrel=1e-12, limit=500)[0]


def reference_mu(alpha):
    """Beta-function closed forms of the large-roughness coefficient."""
    if alpha < 1 / 3:
        p = (1 - 3 * alpha) / (1 - alpha)
        return 2**p / (1 - alpha) * beta_fn(p, 3 - p)
    return beta_fn(4 / (1 + alpha), (3 * alpha - 1) / (1 + alpha)) / (1 + alpha)


@pytest.mark.parametrize("eps, alpha, h", [(0.0, 0.0, 1e-3), (0.1, 0.0, 1e-4), (0.05, 0.5, 1e-3),
                                           (1e-3, 0.9, 1e-6), (0.2, 0.3, 0.05)])
def test_drag_integral_against_scipy(eps, alpha, h):
    p = GapProfile.rough(eps, alpha) if eps else GapProfile.smooth()
    est = drag_integral(p, h)
    assert est.method is Method.EXACT_INTEGRAL
    assert est.value == pytest.approx(reference_drag(eps, alpha, h), rel=1e-9)


def test_smooth_drag_near_paraboloid_value():
    # for the paraboloid tip h + r^2/2 the integral is elementary:
    # 6 pi / h * (1 - 2h/(h+U) + h^2/(h+U)^2) with U = r0^2 / 2
    h, u = 1e-6, 0.125
    paraboloid = SIX_PI / h * (1 - 2 * h / (h + u) + (h / (h + u)) ** 2)
    exact = drag_integral(GapProfile.smooth(), h).value
    assert exact < paraboloid
    assert exact == pytest.approx(paraboloid, rel=2e-4)


def test_drag_rejects_bad_input():
    with pytest.raises(DomainError):
        drag_integral(GapProfile.smooth(), 0.0)
    with pytest.raises(DomainError):
        drag_integral(GapProfile.corrugated(0.1, 1.0), 0.1)


@pytest.mark.parametrize("alpha", [0.0, 0.25, 1 / 3, 0.5, 0.9])
def test_cal_I_at_zero_beta(alpha):
    assert cal_I(0.0, alpha).value == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("beta, alpha", [(0.3, 0.0), (3.0, 0.5), (50.0, 0.2), (1e3, 0.9)])
def test_cal_I_against_scipy(beta, alpha):
    ref = quad(lambda s: s**3 / (1 + s * s / 2 + beta * s ** (1 + alpha)) ** 3, 0, np.inf,
               epsabs=0, epsrel=1e-12, limit=500)[0]
    assert cal_I(beta, alpha).value == pytest.approx(ref, rel=1e-8)


@settings(max_examples=25, deadline=None)
@given(st.floats(0.0, 100.0), st.floats(1e-3, 100.0), st.floats(0.0, 0.95))
def test_cal_I_decreases_in_beta(b, db, alpha):
    assert cal_I(b + db, alpha).value < cal_I(b, alpha).value


def exact_J0(h, r0=0.5):
    y = 1 + r0 * r0 / (2 * h)
    return 8 * (math.log(y) + 3 / y - 1.5 / y**2 + 1 / (3 * y**3) - 11 / 6)


@pytest.mark.parametrize("h", [1e-2, 1e-4, 1e-8])
def test_cal_J_smooth_antiderivative(h):
    assert cal_J(0.0, h, 0.0).value == pytest.approx(exact_J0(h), rel=1e-10)


def test_cal_J_grows_like_eight_log():
    ratios = [cal_J(0.0, h, 0.0).value / abs(math.log(h)) for h in (1e-4, 1e-8, 1e-16)]
    assert ratios[0] < ratios[1] < ratios[2] < 8.0
    assert ratios[2] == pytest.approx(8.0, rel=0.15)


def test_cal_J_decreases_with_roughness():
    values = [cal_J(b, 1e-8, 0.5).value for b in (0.0, 0.1, 1.0, 10.0)]
    assert all(b < a for a, b in zip(values[:-1], values[1:]))


@pytest.mark.parametrize("alpha", [round(0.1 * k, 1) for k in range(10)])
def test_lambda_against_quadrature(alpha):
    ref = quad(lambda s: 3 * s ** (4 + alpha) * (1 + s * s / 2) ** -4, 0, np.inf,
               epsabs=0, epsrel=1e-13, limit=500)[0]
    assert lambda_alpha(alpha) == pytest.approx(ref, rel=1e-10)


def test_lambda_zero_exact():
    assert lambda_alpha(0.0) == pytest.approx(3 * math.sqrt(2) * math.pi / 8, abs=1e-15)


@pytest.mark.parametrize("alpha", [0.0, 0.1, 0.2, 0.3, 0.33, 0.34, 0.4, 0.5, 0.7, 0.9, 0.999])
def test_mu_against_beta_functions(alpha):
    assert mu_alpha(alpha) == pytest.approx(reference_mu(alpha), rel=1e-8)


def test_mu_known_values():
    assert mu_alpha(0.0) == pytest.approx(1.0, abs=1e-12)
    assert mu_alpha(0.5) == pytest.approx(1.3435550846, rel=1e-9)
    with pytest.raises(DomainError):
        mu_alpha(1 / 3)


def test_alpha_constants_log_case():
    c = AlphaConstants.compute(1 / 3)
    assert c.mu_alpha is None
    assert c.lambda_alpha == pytest.approx(lambda_alpha(1 / 3))


@pytest.mark.parametrize("alpha, power", [(0.0, 2.0), (0.2, 2 / 0.8), (0.5, 8 / 3), (0.9, 4 / 1.9)])
def test_large_beta_power_laws(alpha, power):
    b = 1e4
    assert cal_I(b, alpha).value * b**power == pytest.approx(mu_alpha(alpha), rel=0.05)


def test_asym_small_beta_branch():
    est = asym_drag(1e-4, 1e-4, 0.0)
    assert est.method is Method.ASYMPTOTIC
    assert est.branch == "small_beta"
    assert est.regime == pytest.approx(1e-2)
    assert est.value == pytest.approx(SIX_PI / (1e-4 + lambda_alpha(0.0) * 1e-4 * 1e-2))


def test_asym_large_beta_branches():
    assert asym_drag(1e-6, 0.1, 0.0).branch == "power_low_alpha"
    assert asym_drag(1e-6, 0.1, 0.0).value == pytest.approx(SIX_PI / 0.01)
    high = asym_drag(1e-8, 0.5, 0.5)
    assert high.branch == "power_high_alpha"
    assert high.value == pytest.approx(SIX_PI * mu_alpha(0.5) * 0.5 ** (-8 / 3) * 1e-8 ** (-1 / 3))
    value, branch = asym_drag_large_beta(1e-8, 0.5, 1 / 3)
    assert branch == "log"
    assert value == pytest.approx(4.5 * math.pi * abs(math.log(1e-8)) / 0.125)


def test_asym_matches_exact_deep_in_large_beta():
    # with eps = 0.01 the cut-off at r0 costs only (eps / (eps + r0/2))^2 ~ 2e-3
    h, eps = 1e-12, 0.01
    ratio = drag_integral(GapProfile.rough(eps, 0.0), h).value / asym_drag(h, eps, 0.0).value
    assert ratio == pytest.approx(1.0, rel=0.02)
