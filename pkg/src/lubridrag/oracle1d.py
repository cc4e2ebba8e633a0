"""Finite-difference oracle for the per-radius film problem.

Minimises the discrete energy

    E[Phi] = sum_i w_i (Phi'')_i^2 + alpha_s Phi'(1)^2 + alpha_p Phi'(0)^2

over grid functions on [0, 1] with ``Phi(0) = 0`` and ``Phi(1) = 1``. ``w``
are trapezoidal weights and ``Phi''`` is the three-point central difference
at every grid node, using one ghost node beyond each end. End slopes are
central differences across the ghost nodes. In the clamped case the boundary
terms are dropped and ``Phi'(0) = Phi'(1) = 0`` fixes the ghost values.

Nothing here uses the closed-form cubics; they are only evaluated in
:func:`compare_to_closed_form`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.linalg import LinAlgError, solveh_banded

from .exceptions import DomainError, SingularSystem
from .slip import RobinCoeffs, phi_coeffs, profile_energy

CLAMPED = "clamped"
ROBIN = "robin"
MIN_POINTS = 8


@dataclass(frozen=True)
class ProfileProblem:
    bc: str = CLAMPED
    n: int = 200
    alpha_s: float = 0.0
    alpha_p: float = 0.0

    def __post_init__(self):
        if self.bc not in (CLAMPED, ROBIN):
            raise DomainError(f"bc must be 'clamped' or 'robin', got {self.bc!r}")
        if int(self.n) != self.n or self.n < MIN_POINTS:
            raise DomainError(f"n must be an integer >= {MIN_POINTS}, got {self.n}")
        for name in ("alpha_s", "alpha_p"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v >= 0.0):
                raise DomainError(f"{name} must be finite and >= 0, got {v}")

    @classmethod
    def clamped(cls, n=200):
        return cls(CLAMPED, n)

    @classmethod
    def robin(cls, alpha_s, alpha_p, n=200):
        return cls(ROBIN, n, float(alpha_s), float(alpha_p))

    @property
    def grid(self):
        return np.linspace(0.0, 1.0, self.n)


@dataclass(frozen=True)
class OracleSolution:
    values: np.ndarray
    energy: float
    n: int
    ghosts: tuple = (0.0, 0.0)

    @property
    def extended(self):
        return np.concatenate([[self.ghosts[0]], self.values, [self.ghosts[1]]])

    def optimality_residuals(self, alpha_s, alpha_p):
        """Discrete ``(Phi''(1) + alpha_s Phi'(1), Phi''(0) - alpha_p Phi'(0))``."""
        d2, _, left, right = _operators(self.n)
        ext = self.extended
        curv = d2 @ ext
        return (float(curv[-1] + alpha_s * (right @ ext)),
                float(curv[0] - alpha_p * (left @ ext)))


@dataclass(frozen=True)
class ClosedFormReport:
    max_abs_gap: float
    energy_gap: float
    continuum_gap: float
    continuum_energy: float
    oracle: OracleSolution


def _operators(n):
    """Stencils acting on the extended vector ``[ghost, Phi_0 .. Phi_{n-1}, ghost]``."""
    k = 1.0 / (n - 1)
    d2 = np.zeros((n, n + 2))
    rows = np.arange(n)
    d2[rows, rows] = 1.0
    d2[rows, rows + 1] = -2.0
    d2[rows, rows + 2] = 1.0
    d2 /= k * k
    w = np.full(n, k)
    w[0] = w[-1] = 0.5 * k
    left = np.zeros(n + 2)
    left[[0, 2]] = (-1.0, 1.0)
    left /= 2.0 * k
    right = np.zeros(n + 2)
    right[[-3, -1]] = (-1.0, 1.0)
    right /= 2.0 * k
    return d2, w, left, right


def _affine_map(p: ProfileProblem):
    """Admissible extended vectors as ``P @ x + q``.

    Robin problems are written as a correction to the straight line, which
    keeps round-off in the normal equations away from the exact solution
    when the Robin weights vanish.
    """
    n = p.n
    k = 1.0 / (n - 1)
    if p.bc == ROBIN:
        q = np.linspace(-k, 1.0 + k, n + 2)
        free = [0] + list(range(2, n)) + [n + 1]
        P = np.zeros((n + 2, n))
        P[free, np.arange(n)] = 1.0
        return P, q
    # clamped: ghosts mirror the first interior neighbours
    q = np.zeros(n + 2)
    q[n] = 1.0
    P = np.zeros((n + 2, n - 2))
    P[2:n, :] = np.eye(n - 2)
    P[0, 0] = 1.0
    P[n + 1, n - 3] = 1.0
    return P, q


def _energy(values, p, ops):
    d2, w, left, right = ops
    curv = d2 @ values
    e = float(np.dot(w, curv * curv))
    if p.bc == ROBIN:
        e += p.alpha_s * float(right @ values) ** 2 + p.alpha_p * float(left @ values) ** 2
    return e


def discrete_energy(extended, p: ProfileProblem) -> float:
    """Discrete energy of an extended vector (ghost, n samples, ghost).

    Constraints are not checked.
    """
    extended = np.asarray(extended, dtype=float)
    if extended.shape != (p.n + 2,):
        raise DomainError(f"expected {p.n + 2} values incl. ghosts, got shape {extended.shape}")
    return _energy(extended, p, _operators(p.n))


def _to_banded_upper(a, bandwidth):
    n = a.shape[0]
    ab = np.zeros((bandwidth + 1, n))
    for d in range(bandwidth + 1):
        ab[bandwidth - d, d:] = np.diagonal(a, d)
    return ab


def minimize_profile(p: ProfileProblem) -> OracleSolution:
    """Exact minimiser of the discrete quadratic energy.

    The stationarity system is symmetric positive definite and banded; it is
    solved by banded Cholesky.
    """
    ops = _operators(p.n)
    d2, w, left, right = ops
    Q = d2.T @ (w[:, None] * d2)
    if p.bc == ROBIN:
        Q += p.alpha_s * np.outer(right, right) + p.alpha_p * np.outer(left, left)
    P, q = _affine_map(p)
    A = P.T @ Q @ P
    if p.bc == ROBIN:
        # the base line has zero curvature and unit end slopes exactly
        rhs = -(P.T @ (p.alpha_s * right + p.alpha_p * left))
    else:
        rhs = -(P.T @ (Q @ q))
    rows, cols = np.nonzero(A)
    bandwidth = int(np.max(np.abs(rows - cols)))
    try:
        x = solveh_banded(_to_banded_upper(A, bandwidth), rhs)
    except LinAlgError as exc:
        raise SingularSystem(f"stationarity system is not positive definite: {exc}") from exc
    if not np.all(np.isfinite(x)):
        raise SingularSystem("stationarity solve produced non-finite values")
    extended = P @ x + q
    extended[1], extended[-2] = 0.0, 1.0
    return OracleSolution(extended[1:-1].copy(), max(_energy(extended, p, ops), 0.0), p.n,
                          ghosts=(float(extended[0]), float(extended[-1])))


def closed_form(p: ProfileProblem):
    """Continuum minimiser ``(cubic, energy)`` for the problem's boundary conditions."""
    from .slip import CubicMinimizer

    if p.bc == CLAMPED:
        return CubicMinimizer(-2.0, 3.0, 0.0), 12.0
    return (phi_coeffs(RobinCoeffs(p.alpha_s, p.alpha_p)),
            float(profile_energy(p.alpha_s, p.alpha_p)))


def compare_to_closed_form(p: ProfileProblem, solution: Optional[OracleSolution] = None
                           ) -> ClosedFormReport:
    """Distance between the discrete minimiser and the continuum cubic.

    ``energy_gap`` is the discrete energy of the sampled cubic minus the
    discrete minimum; ``continuum_gap`` is the discrete minimum minus the
    continuum minimum.
    """
    sol = minimize_profile(p) if solution is None else solution
    cubic, energy = closed_form(p)
    k = 1.0 / (p.n - 1)
    samples = cubic(np.linspace(-k, 1.0 + k, p.n + 2))
    return ClosedFormReport(
        max_abs_gap=float(np.max(np.abs(sol.values - samples[1:-1]))),
        energy_gap=discrete_energy(samples, p) - sol.energy,
        continuum_gap=sol.energy - energy,
        continuum_energy=energy,
        oracle=sol,
    )
