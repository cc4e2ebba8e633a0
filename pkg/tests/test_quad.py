import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from lubridrag.exceptions import DomainError, NonConvergence, NonFinite
from lubridrag.quad import QuadConfig, integrate, integrate_semi_infinite


def test_square_on_unit_interval():
    res = integrate(lambda x: x * x, 0.0, 1.0)
    assert res.value == pytest.approx(1.0 / 3.0, abs=1e-15)
    assert res.err_estimate <= 1e-10
    assert res.n_evals == 15


def test_scalar_only_integrand_is_accepted():
    res = integrate(lambda x: math.exp(-x), 0.0, 2.0)
    assert res.value == pytest.approx(1.0 - math.exp(-2.0), rel=1e-13)


@pytest.mark.parametrize("f, ref", [
    (lambda s: np.exp(-s), 1.0),
    (lambda s: 1.0 / (1.0 + s) ** 2, 1.0),
    (lambda s: 3.0 * s**4 * (1.0 + 0.5 * s * s) ** -4, 3.0 * math.sqrt(2.0) * math.pi / 8.0),
])
def test_semi_infinite_examples(f, ref):
    assert integrate_semi_infinite(f, 0.0).value == pytest.approx(ref, rel=1e-10)


def test_semi_infinite_shifted_origin():
    res = integrate_semi_infinite(lambda s: np.exp(-s), 2.0)
    assert res.value == pytest.approx(math.exp(-2.0), rel=1e-10)


def test_endpoint_singularity_against_scipy():
    f = lambda x: x**-0.5 * np.cos(x)  # noqa: E731
    ref = quad(lambda x: x**-0.5 * math.cos(x), 0.0, 1.0, epsabs=0, epsrel=1e-13, limit=200)[0]
    assert integrate(f, 0.0, 1.0).value == pytest.approx(ref, rel=1e-9)


def test_peaked_integrand_against_scipy():
    f = lambda x: 1.0 / (1e-6 + (x - 0.3) ** 2)  # noqa: E731
    ref = quad(f, 0.0, 1.0, points=[0.3], epsabs=0, epsrel=1e-13, limit=500)[0]
    assert integrate(f, 0.0, 1.0).value == pytest.approx(ref, rel=1e-9)


@pytest.mark.filterwarnings("ignore::RuntimeWarning")
def test_nonfinite_integrand_raises():
    with pytest.raises(NonFinite):
        integrate(lambda x: 1.0 / x, 0.0, 1.0)


def test_nonconvergence_is_reported():
    cfg = QuadConfig(abs_tol=1e-300, rel_tol=1e-300, max_subdivisions=5)
    with pytest.raises(NonConvergence):
        integrate(lambda x: np.sin(1.0 / (x + 1e-3)), 0.0, 1.0, cfg)


@pytest.mark.parametrize("kwargs", [dict(abs_tol=0.0), dict(rel_tol=-1.0), dict(max_subdivisions=0)])
def test_config_validation(kwargs):
    with pytest.raises(DomainError):
        QuadConfig(**kwargs)


@pytest.mark.parametrize("a, b", [(1.0, 1.0), (2.0, 1.0), (0.0, math.inf)])
def test_interval_validation(a, b):
    with pytest.raises(DomainError):
        integrate(lambda x: x, a, b)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.floats(-10, 10), min_size=1, max_size=30),
       st.floats(-5, 5), st.floats(0.01, 5))
def test_polynomials_up_to_degree_29_single_panel(coeffs, a, width):
    b = a + width
    poly = np.polynomial.Polynomial(coeffs)
    ref = poly.integ()(b) - poly.integ()(a)
    res = integrate(poly, a, b, QuadConfig(abs_tol=1e300, rel_tol=1e300))
    scale = max(1.0, float(np.polynomial.Polynomial(np.abs(coeffs)).integ()(max(abs(a), abs(b)))))
    assert res.n_evals == 15
    assert abs(res.value - ref) <= 1e-12 * scale


@settings(max_examples=40, deadline=None)
@given(st.floats(0.1, 3.0), st.floats(0.05, 0.95))
def test_additivity(k, c):
    f = lambda x: np.exp(-k * x) * np.sin(3 * x)  # noqa: E731
    whole = integrate(f, 0.0, 1.0).value
    parts = integrate(f, 0.0, c).value + integrate(f, c, 1.0).value
    assert whole == pytest.approx(parts, abs=1e-12)
