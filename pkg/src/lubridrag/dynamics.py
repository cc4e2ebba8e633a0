"""Contact dynamics of the reduced equation ``h'' + h' F(h) = 0``.

Any drag model can be plugged in: a plain callable ``h -> F(h)`` or an
estimator exposing ``predict``. Since ``dv/dh = -F(h)``, the velocity is an
explicit function of the gap and a trajectory is monotone in ``h``. The
integrator exploits this by marching in ``u = ln h`` while the solid moves
fast, and switching to time once the velocity has decayed.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Callable, List, Union

import numpy as np
from scipy.integrate import solve_ivp

from .exceptions import DomainError, Indeterminate, NonFiniteDrag, StepFailure
from .quad import DEFAULT_CONFIG, QuadConfig, integrate

CONTACT_FRACTION = 1e-12
REST_FRACTION = 1e-10
SWITCH_FRACTION = 1e-2
MAX_GROWTH = 1e12


@dataclass(frozen=True)
class DynState:
    t: float
    h: float
    v: float


@dataclass(frozen=True)
class ContactAt:
    t: float
    kind: str = field(default="contact", init=False)


@dataclass(frozen=True)
class AsymptoticRest:
    h_star: float
    kind: str = field(default="rest", init=False)


@dataclass(frozen=True)
class Truncated:
    t_max: float
    kind: str = field(default="truncated", init=False)


Outcome = Union[ContactAt, AsymptoticRest, Truncated]


@dataclass
class Trajectory:
    """Accepted integrator steps and the terminal outcome."""

    samples: List[DynState]
    outcome: Outcome

    @property
    def t(self):
        return np.array([s.t for s in self.samples])

    @property
    def h(self):
        return np.array([s.h for s in self.samples])

    @property
    def v(self):
        return np.array([s.v for s in self.samples])

    def to_csv(self, stream=None) -> str:
        """Write ``t,h,v`` rows with 17 significant digits; return the text."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["t", "h", "v"])
        for s in self.samples:
            writer.writerow([format(s.t, ".17g"), format(s.h, ".17g"), format(s.v, ".17g")])
        text = buf.getvalue()
        if stream is not None:
            stream.write(text)
        return text


def as_drag_function(drag) -> Callable[[float], float]:
    """Wrap a drag handle as a checked scalar function of the gap."""
    if hasattr(drag, "predict") and not callable(drag):
        def raw(h):
            return drag.predict([[h]])[0]
    elif callable(drag):
        raw = drag
    else:
        raise DomainError("drag handle must be callable or expose predict()")

    def f(h):
        value = float(raw(h))
        if not math.isfinite(value):
            raise NonFiniteDrag(f"drag returned {value} at h={h!r}")
        if value <= 0.0:
            raise DomainError(f"drag must be positive, got {value} at h={h!r}")
        return value

    return f


def _check_start(h0, v0):
    if not (math.isfinite(h0) and h0 > 0.0):
        raise DomainError(f"h0 must be finite and > 0, got {h0!r}")
    if not math.isfinite(v0):
        raise DomainError(f"v0 must be finite, got {v0!r}")


def _log_integral(f, lo, hi, cfg):
    """``int_lo^hi F(s) ds`` computed in ``ln s``; one panel per decade."""
    if hi <= lo:
        return 0.0
    a, b = math.log(lo), math.log(hi)
    pts = np.linspace(a, b, max(2, int(math.ceil((b - a) / math.log(10.0))) + 1))

    def g(u):
        s = math.exp(u)
        return f(s) * s

    return math.fsum(integrate(g, float(x0), float(x1), cfg).value
                     for x0, x1 in zip(pts[:-1], pts[1:]))


def velocity_gap(drag, h0, v0, h, cfg: QuadConfig = DEFAULT_CONFIG) -> float:
    """Velocity at gap ``h`` from the first integral ``v0 + int_h^h0 F``.

    Only physical while the velocity keeps the sign of ``v0``.
    """
    _check_start(h0, v0)
    if not (0.0 < h <= h0):
        raise DomainError(f"need 0 < h <= h0, got h={h!r}, h0={h0!r}")
    return v0 + _log_integral(as_drag_function(drag), h, h0, cfg)


def velocity_gap_profile(drag, h0, v0, hs, cfg: QuadConfig = DEFAULT_CONFIG):
    """Vectorised :func:`velocity_gap` by cumulative integration between samples."""
    _check_start(h0, v0)
    hs = np.asarray(hs, dtype=float)
    if np.any(hs <= 0.0) or np.any(hs > h0):
        raise DomainError("all gaps must satisfy 0 < h <= h0")
    f = as_drag_function(drag)
    order = np.argsort(-hs, kind="stable")
    out = np.empty_like(hs)
    acc, upper = 0.0, float(h0)
    for i in order:
        acc += _log_integral(f, float(hs[i]), upper, cfg)
        upper = min(upper, float(hs[i]))
        out[i] = v0 + acc
    return out


def _check_status(sol):
    if sol.status == -1:
        raise StepFailure(sol.message)


def simulate(drag, h0, v0, t_max=math.inf, tol=1e-8) -> Trajectory:
    """Integrate the contact equation from ``(h0, v0)``.

    Parameters
    ----------
    drag : callable or estimator
        Drag model ``h -> F(h) > 0``.
    h0, v0 : float
        Initial gap and velocity.
    t_max : float
        Time horizon; reaching it gives a ``Truncated`` outcome.
    tol : float
        Relative tolerance of the embedded Runge-Kutta pair. The absolute
        tolerance on the velocity is ``tol / 100``.

    Returns
    -------
    Trajectory
        Contact is declared at ``h = 1e-12 h0`` and rest once
        ``|v| < 1e-10 |v0|``.
    """
    _check_start(h0, v0)
    if not (tol > 0.0 and math.isfinite(tol)):
        raise DomainError(f"tol must be positive, got {tol!r}")
    if not t_max > 0.0:
        raise DomainError(f"t_max must be positive, got {t_max!r}")
    f = as_drag_function(drag)
    samples = [DynState(0.0, float(h0), float(v0))]
    if v0 == 0.0:
        return Trajectory(samples, AsymptoticRest(float(h0)))

    h_contact = CONTACT_FRACTION * h0
    atol = tol * 1e-2
    speed0 = abs(v0)

    # fast phase: independent variable u = ln h, state (t, v)
    def gap_rhs(u, y):
        h = math.exp(u)
        return [h / y[1], -h * f(h)]

    def slowed(u, y):
        return abs(y[1]) - SWITCH_FRACTION * speed0
    slowed.terminal = True

    def horizon(u, y):
        return y[0] - t_max
    horizon.terminal = True

    u0 = math.log(h0)
    u_end = math.log(h_contact) if v0 < 0 else u0 + math.log(MAX_GROWTH)
    sol = solve_ivp(gap_rhs, (u0, u_end), [0.0, float(v0)], method="DOP853",
                    rtol=tol, atol=[atol * h0 / speed0, atol],
                    events=[slowed, horizon] if math.isfinite(t_max) else [slowed])
    _check_status(sol)
    for u, (t, v) in zip(sol.t[1:], sol.y.T[1:]):
        samples.append(DynState(float(t), math.exp(u), float(v)))
    last = samples[-1]
    if math.isfinite(t_max) and sol.t_events[1].size:
        return Trajectory(samples, Truncated(float(t_max)))
    if sol.status == 0:
        if v0 < 0:
            samples[-1] = DynState(last.t, float(h_contact), last.v)
            return Trajectory(samples, ContactAt(last.t))
        return Trajectory(samples, Truncated(last.t))

    # slow phase: time as independent variable, state (h, v)
    def time_rhs(t, y):
        h = max(y[0], 0.5 * h_contact)
        return [y[1], -y[1] * f(h)]

    def contact(t, y):
        return y[0] - h_contact
    contact.terminal = True
    contact.direction = -1

    def rest(t, y):
        return abs(y[1]) - REST_FRACTION * speed0
    rest.terminal = True

    t_start = last.t
    t_stop = t_max if math.isfinite(t_max) else t_start + 1e300
    sol = solve_ivp(time_rhs, (t_start, t_stop), [last.h, last.v], method="DOP853",
                    rtol=tol, atol=[tol * 1e-2 * last.h, atol], events=[contact, rest])
    _check_status(sol)
    for t, (h, v) in zip(sol.t[1:], sol.y.T[1:]):
        samples.append(DynState(float(t), float(h), float(v)))
    if sol.t_events[0].size:
        return Trajectory(samples, ContactAt(float(sol.t_events[0][0])))
    if sol.t_events[1].size:
        return Trajectory(samples, AsymptoticRest(samples[-1].h))
    return Trajectory(samples, Truncated(float(t_max)))


def collision_predicate(drag, h0, v0, cfg: QuadConfig = DEFAULT_CONFIG,
                        max_decades: int = 60, window: int = 4) -> bool:
    """Whether a solid launched at ``v0 < 0`` from ``h0`` reaches the wall.

    Contact happens iff ``int_0^h0 F`` is finite and below ``|v0|``. The
    integral is accumulated decade by decade towards zero. Ratios of
    successive decade increments that settle at a constant below one mark
    convergence and give a geometric tail bound; ratios that settle at one
    (or a running total that already exceeds ``|v0|``) mean no contact.
    Slowly drifting ratios are left unclassified and eventually raise
    :class:`Indeterminate`.
    """
    _check_start(h0, v0)
    if v0 >= 0.0:
        raise DomainError(f"v0 must be negative, got {v0!r}")
    f = as_drag_function(drag)
    target = -v0
    total, increments = 0.0, []
    upper = float(h0)
    for k in range(1, max_decades + 1):
        lower = h0 * 10.0 ** (-k)
        d = _log_integral(f, lower, upper, cfg)
        total += d
        upper = lower
        increments.append(d)
        if total >= target:
            return False
        if len(increments) <= window:
            continue
        recent = increments[-window - 1:]
        ratios = [b / a for a, b in zip(recent[:-1], recent[1:]) if a > 0.0]
        if len(ratios) < window:
            continue
        r_lo, r_hi = min(ratios), max(ratios)
        if r_hi < 0.9 and r_hi <= 1.02 * r_lo:
            # settled geometric decay; the tail is bounded with a safety factor
            tail = 2.0 * d * r_hi / (1.0 - r_hi)
            if total + tail < target:
                return True
        if r_lo > 0.999 and k >= 2 * window:
            return False
    raise Indeterminate(f"could not classify int_0^h0 F within {max_decades} decades")
