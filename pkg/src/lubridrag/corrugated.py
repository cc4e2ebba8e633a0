"""Sphere above a small-amplitude, high-frequency corrugated wall.

The wall is ``z = eps * gamma(x/eps, y/eps)`` with ``gamma <= 0`` periodic and
``max gamma = 0``. Only two numbers about it are used: the depth
``lam = -min gamma`` and the eigenvalues of the mobility tensor, which is
supplied by the caller.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError
from .noslip import SIX_PI
from .results import DragEstimate, Method

SHIFT_WARN_RATIO = 0.1


@dataclass(frozen=True)
class MobilityTensor:
    """Eigenvalues of the symmetric positive definite 2x2 mobility tensor."""

    beta_x: float
    beta_y: float

    def __post_init__(self):
        for name in ("beta_x", "beta_y"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0.0):
                raise DomainError(f"{name} must be finite and > 0, got {v}")

    @classmethod
    def from_matrix(cls, matrix):
        """Diagonalise a symmetric positive definite 2x2 matrix."""
        m = np.asarray(matrix, dtype=float)
        if m.shape != (2, 2) or not np.allclose(m, m.T):
            raise DomainError("mobility tensor must be a symmetric 2x2 matrix")
        w = np.linalg.eigvalsh(m)
        return cls(float(w[0]), float(w[1]))


@dataclass(frozen=True)
class CorrugationData:
    eps: float
    lam: float

    def __post_init__(self):
        if not (math.isfinite(self.eps) and self.eps > 0.0):
            raise DomainError(f"eps must be finite and > 0, got {self.eps}")
        if not (math.isfinite(self.lam) and self.lam >= 0.0):
            raise DomainError(f"lam must be finite and >= 0, got {self.lam}")


def _check_h(h):
    h = float(h)
    if not (h > 0.0 and math.isfinite(h)):
        raise DomainError(f"gap h must be finite and > 0, got {h}")
    return h


def drag_bounds(h, cd: CorrugationData):
    """Flat-wall bounds: wall pushed down to its troughs, and wall at its crests.

    The ``O(|ln .|)`` remainders have unknown constants; their scale is
    reported in ``err_estimate``.
    """
    h = _check_h(h)
    shifted = h + cd.lam * cd.eps
    lower = DragEstimate(SIX_PI / shifted, Method.LOWER_BOUND, err_estimate=abs(math.log(shifted)))
    upper = DragEstimate(SIX_PI / h, Method.UPPER_BOUND, err_estimate=abs(math.log(h)))
    return lower, upper


def effective_beta(mt: MobilityTensor) -> float:
    return 0.5 * (mt.beta_x + mt.beta_y)


def shifted_wall_drag(h, eps, beta) -> DragEstimate:
    """No-slip drag against a flat wall lowered by ``eps * beta``: ``6 pi / (h + eps beta)``."""
    h = _check_h(h)
    if not (eps >= 0.0 and math.isfinite(eps)):
        raise DomainError(f"eps must be finite and >= 0, got {eps}")
    if not (beta >= 0.0 and math.isfinite(beta)):
        raise DomainError(f"beta must be finite and >= 0, got {beta}")
    ratio = eps / h
    warning = None
    if ratio > SHIFT_WARN_RATIO:
        warning = f"eps / h = {ratio:.3g} > {SHIFT_WARN_RATIO}; shifted-wall law assumes eps << h"
    return DragEstimate(SIX_PI / (h + eps * beta), Method.ASYMPTOTIC, regime=ratio,
                        branch="shifted_wall", warning=warning)
