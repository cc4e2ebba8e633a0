"""Solid surface profiles and the gap function.

The solid tip sits at the origin and its lower surface is ``z = gamma_s(r)``
for ``r <= r0``. Three families are supported:

* ``smooth_sphere``: unit sphere, ``gamma_s(r) = 1 - sqrt(1 - r**2)``
* ``rough_power``: sphere plus a cusp ``eps * r**(1 + alpha)``, ``alpha`` in [0, 1)
* ``corrugated``: smooth sphere over a wall with small periodic corrugation,
  described only by its amplitude ``eps`` and depth ``lam = -min(gamma)``
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError

SMOOTH_SPHERE = "smooth_sphere"
ROUGH_POWER = "rough_power"
CORRUGATED = "corrugated"
KINDS = (SMOOTH_SPHERE, ROUGH_POWER, CORRUGATED)

DEFAULT_R0 = 0.5


@dataclass(frozen=True)
class GapProfile:
    """Immutable description of the solid surface near its tip.

    For ``corrugated`` profiles the solid itself is a smooth sphere; ``eps``
    and ``lam`` then describe the wall and are only read by
    :mod:`lubridrag.corrugated`.
    """

    kind: str = SMOOTH_SPHERE
    eps: float = 0.0
    alpha: float = 0.0
    lam: float = 0.0
    r0: float = DEFAULT_R0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown profile kind {self.kind!r}")
        for name in ("eps", "alpha", "lam", "r0"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")
        if not 0.0 < self.r0 <= 1.0:
            raise DomainError(f"r0 must lie in (0, 1], got {self.r0}")
        if self.kind == SMOOTH_SPHERE and self.eps != 0.0:
            raise DomainError("smooth_sphere has eps = 0; use rough_power")
        if self.eps < 0.0:
            raise DomainError(f"eps must be >= 0, got {self.eps}")
        if not 0.0 <= self.alpha < 1.0:
            raise DomainError(f"alpha must lie in [0, 1), got {self.alpha}")
        if self.kind == CORRUGATED:
            if self.eps <= 0.0:
                raise DomainError("corrugated profile needs eps > 0")
            if self.lam < 0.0:
                raise DomainError(f"lam must be >= 0, got {self.lam}")

    @classmethod
    def smooth(cls, r0=DEFAULT_R0):
        return cls(SMOOTH_SPHERE, r0=r0)

    @classmethod
    def rough(cls, eps, alpha, r0=DEFAULT_R0):
        return cls(ROUGH_POWER, eps=float(eps), alpha=float(alpha), r0=r0)

    @classmethod
    def corrugated(cls, eps, lam, r0=DEFAULT_R0):
        return cls(CORRUGATED, eps=float(eps), lam=float(lam), r0=r0)

    @classmethod
    def from_dict(cls, d):
        """Build from the CLI/JSON form ``{"kind": "rough_power", "eps": .., ...}``."""
        d = dict(d)
        kind = d.pop("kind", SMOOTH_SPHERE)
        if "lambda" in d:
            d["lam"] = d.pop("lambda")
        unknown = set(d) - {"eps", "alpha", "lam", "r0"}
        if unknown:
            raise DomainError(f"unknown profile fields {sorted(unknown)}")
        return cls(kind, **{k: float(v) for k, v in d.items()})

    def to_dict(self):
        out = {"kind": self.kind, "r0": self.r0}
        if self.kind == ROUGH_POWER:
            out.update(eps=self.eps, alpha=self.alpha)
        elif self.kind == CORRUGATED:
            out.update(eps=self.eps, **{"lambda": self.lam})
        return out

    @property
    def roughness(self):
        """Amplitude of the ``r**(1 + alpha)`` term on the solid (0 unless rough_power)."""
        return self.eps if self.kind == ROUGH_POWER else 0.0


def _check_radius(profile, r):
    r = np.asarray(r, dtype=float)
    if np.any(r < 0.0) or np.any(r > profile.r0) or not np.all(np.isfinite(r)):
        raise DomainError(f"radius outside [0, r0={profile.r0}]")
    return r


def _sphere(r):
    # 1 - sqrt(1 - r^2) without cancellation for small r
    return r * r / (1.0 + np.sqrt(1.0 - r * r))


def gamma_s(profile: GapProfile, r):
    """Height of the solid surface above its tip at radius ``r``."""
    r = _check_radius(profile, r)
    eps = profile.roughness
    out = _sphere(r)
    if eps:
        out = out + eps * r ** (1.0 + profile.alpha)
    return out[()] if out.ndim == 0 else out


def gamma_s_prime(profile: GapProfile, r):
    """Analytic slope ``d gamma_s / dr``.

    At ``r = 0`` with ``alpha = 0`` the cusp has a one-sided slope ``eps``;
    that value is returned.
    """
    r = _check_radius(profile, r)
    out = r / np.sqrt(1.0 - r * r)
    eps = profile.roughness
    if eps:
        a = profile.alpha
        out = out + eps * (1.0 + a) * (np.ones_like(r) if a == 0.0 else r**a)
    return out[()] if out.ndim == 0 else out


def gap(profile: GapProfile, h, r):
    """Fluid-film thickness ``h + gamma_s(r)`` between wall and solid."""
    h = float(h)
    if not h > 0.0 or not math.isfinite(h):
        raise DomainError(f"gap h must be finite and > 0, got {h}")
    return h + gamma_s(profile, r)


def regime_beta(h, eps, alpha):
    """Roughness regime parameter ``eps * h**((alpha - 1) / 2)``.

    Values much smaller than one mean the roughness barely perturbs the
    sphere drag; values much larger than one mean it dominates.
    """
    h = float(h)
    if not h > 0.0 or not math.isfinite(h):
        raise DomainError(f"gap h must be finite and > 0, got {h}")
    if eps < 0.0:
        raise DomainError(f"eps must be >= 0, got {eps}")
    if not 0.0 <= alpha < 1.0:
        raise DomainError(f"alpha must lie in [0, 1), got {alpha}")
    if eps == 0.0:
        return 0.0
    return eps * h ** ((alpha - 1.0) / 2.0)
