import io
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from lubridrag.dynamics import (
    AsymptoticRest,
    ContactAt,
    Truncated,
    collision_predicate,
    simulate,
    velocity_gap,
    velocity_gap_profile,
)
from lubridrag.estimators import CorrugatedDrag, NoSlipDrag, SlipDrag
from lubridrag.exceptions import DomainError, Indeterminate, NonFiniteDrag

SIX_PI = 6 * math.pi


def smooth(h):
    return SIX_PI / h


def sqrt_drag(h):
    return h**-0.5


def test_smooth_drag_comes_to_rest():
    traj = simulate(smooth, 0.1, -1.0)
    assert isinstance(traj.outcome, AsymptoticRest)
    assert traj.outcome.h_star == pytest.approx(0.1 * math.exp(-1 / SIX_PI), abs=1e-8)


def test_integrable_drag_makes_contact():
    traj = simulate(sqrt_drag, 0.1, -1.0)
    assert isinstance(traj.outcome, ContactAt)
    # v(h) = -1 + 2 sqrt(0.1) - 2 sqrt(h); t = int dh / |v|
    c = 1 - 2 * math.sqrt(0.1)
    t_ref = quad(lambda h: 1 / (c + 2 * math.sqrt(h)), 1e-13, 0.1, epsabs=0, epsrel=1e-12)[0]
    assert traj.outcome.t == pytest.approx(t_ref, rel=1e-6)


def test_zero_velocity_is_an_equilibrium():
    traj = simulate(smooth, 0.3, 0.0)
    assert traj.outcome == AsymptoticRest(0.3)
    assert len(traj.samples) == 1


def test_outward_motion_comes_to_rest():
    traj = simulate(smooth, 0.1, 1.0)
    assert isinstance(traj.outcome, AsymptoticRest)
    assert traj.outcome.h_star == pytest.approx(0.1 * math.exp(1 / SIX_PI), rel=1e-7)


def test_horizon_truncates():
    traj = simulate(smooth, 0.1, -1.0, t_max=1e-3)
    assert traj.outcome == Truncated(1e-3)
    assert traj.samples[-1].t <= 1e-3 * (1 + 1e-9)


@pytest.mark.parametrize("drag, v0", [(smooth, -1.0), (sqrt_drag, -1.0), (smooth, -5.0)])
def test_trajectory_invariants(drag, v0):
    traj = simulate(drag, 0.1, v0, tol=1e-9)
    t, h, v = traj.t, traj.h, traj.v
    assert np.all(np.diff(t) > 0)
    assert np.all(np.diff(h) <= 0)
    assert np.all(np.diff(v) >= 0)
    np.testing.assert_allclose(v, velocity_gap_profile(drag, 0.1, v0, h), rtol=0, atol=1e-8)


@settings(max_examples=8, deadline=None)
@given(st.floats(0.2, 5.0))
def test_time_scaling_symmetry(c):
    base = simulate(smooth, 0.1, -1.0, tol=1e-10)
    scaled = simulate(lambda h: c * smooth(h), 0.1, -c, tol=1e-10)
    assert scaled.outcome.h_star == pytest.approx(base.outcome.h_star, rel=1e-9)
    # h_scaled(t / c) = h_base(t)
    h_interp = np.interp(base.t / c, scaled.t, scaled.h)
    mid = len(base.t) // 2
    assert h_interp[mid] == pytest.approx(base.h[mid], rel=1e-4)


def test_velocity_gap_examples():
    assert velocity_gap(smooth, 0.1, -1.0, 0.05) == pytest.approx(-1 + SIX_PI * math.log(2), rel=1e-10)
    assert velocity_gap(smooth, 0.1, -1.0, 0.1) == -1.0
    assert velocity_gap(sqrt_drag, 0.1, -1.0, 1e-16) == pytest.approx(-1 + 2 * math.sqrt(0.1), abs=1e-7)
    with pytest.raises(DomainError):
        velocity_gap(smooth, 0.1, -1.0, 0.2)


def test_velocity_gap_profile_matches_pointwise():
    hs = np.array([0.05, 0.001, 0.02])
    prof = velocity_gap_profile(smooth, 0.1, -1.0, hs)
    np.testing.assert_allclose(prof, [velocity_gap(smooth, 0.1, -1.0, h) for h in hs], rtol=1e-12)


def test_csv_export():
    traj = simulate(smooth, 0.1, -1.0)
    text = traj.to_csv(io.StringIO())
    lines = text.splitlines()
    assert lines[0] == "t,h,v"
    assert len(lines) == len(traj.samples) + 1
    t, h, v = (float(x) for x in lines[-1].split(","))
    last = traj.samples[-1]
    assert (t, h, v) == (last.t, last.h, last.v)


def test_nonfinite_drag_is_reported():
    with pytest.raises(NonFiniteDrag):
        simulate(lambda h: math.nan, 0.1, -1.0)
    with pytest.raises(DomainError):
        simulate(lambda h: -1.0, 0.1, -1.0)


@pytest.mark.parametrize("h0, v0", [(0.0, -1.0), (-1.0, -1.0), (0.1, math.inf)])
def test_bad_start(h0, v0):
    with pytest.raises(DomainError):
        simulate(smooth, h0, v0)


def test_predicate_examples():
    assert collision_predicate(smooth, 0.1, -1.0) is False
    assert collision_predicate(smooth, 0.1, -1e3) is False
    assert collision_predicate(sqrt_drag, 0.1, -1.0) is True
    assert collision_predicate(sqrt_drag, 0.1, -0.5) is False
    with pytest.raises(DomainError):
        collision_predicate(smooth, 0.1, 1.0)


def test_predicate_rough_noslip():
    drag = NoSlipDrag(eps=0.1, alpha=0.0).fit()
    assert collision_predicate(drag, 0.01, -1e3) is True


def test_predicate_indeterminate_for_slow_divergence():
    # 1 / (h |ln h|^1.2) converges so slowly that decade ratios stay near one
    with pytest.raises(Indeterminate):
        collision_predicate(lambda h: 1 / (h * abs(math.log(h)) ** 1.2), 0.1, -100.0, max_decades=12)


def _threshold(drag, h0):
    return velocity_gap(drag, h0, 0.0, 1e-14 * h0)


MODELS = [
    ("noslip-smooth", NoSlipDrag(), 0.01),
    ("noslip-rough", NoSlipDrag(eps=0.1, alpha=0.0), 0.01),
    ("slip", SlipDrag(beta_s=0.01, beta_p=0.01), 0.01),
    ("corrugated", CorrugatedDrag(eps=1e-3, depth=1.0, beta_x=0.5, beta_y=0.5), 0.01),
]


@pytest.mark.parametrize("name, drag, h0", MODELS, ids=[m[0] for m in MODELS])
@pytest.mark.parametrize("factor", [0.5, 2.0])
def test_contact_dichotomy(name, drag, h0, factor):
    drag.fit()
    if name in ("noslip-smooth", "corrugated"):
        v0 = -factor * 5.0  # non-integrable drag: never contact
    else:
        v0 = -factor * _threshold(drag, h0)
    predicted = collision_predicate(drag, h0, v0)
    traj = simulate(drag, h0, v0, tol=1e-8)
    assert predicted == isinstance(traj.outcome, ContactAt)
    if name not in ("noslip-smooth", "corrugated"):
        assert predicted == (factor > 1)
