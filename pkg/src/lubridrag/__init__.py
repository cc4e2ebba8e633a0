"""Lubrication drag on a solid approaching a wall in Stokes flow.

Three roughness models are covered: a non-smooth (power-law) surface with
no-slip, Navier slip on both surfaces, and a small-amplitude corrugated
wall. Exact reduced integrals are provided alongside their closed-form
asymptotics, a discrete variational oracle for the per-radius profile
problem, and an integrator for the resulting contact dynamics.
"""

from .corrugated import CorrugationData, MobilityTensor, drag_bounds, effective_beta, shifted_wall_drag
from .dynamics import (
    AsymptoticRest,
    ContactAt,
    DynState,
    Trajectory,
    Truncated,
    collision_predicate,
    simulate,
    velocity_gap,
)
from .estimators import CorrugatedDrag, NoSlipDrag, SlipDrag, check_gaps, make_estimator
from .exceptions import (
    DomainError,
    Indeterminate,
    LubriDragError,
    NonConvergence,
    NonFinite,
    NonFiniteDrag,
    NumericalError,
    SingularSystem,
    StepFailure,
)
from .geometry import GapProfile, gamma_s, gap, regime_beta
from .noslip import AlphaConstants, asym_drag, cal_I, cal_J, drag_integral, lambda_alpha, mu_alpha
from .oracle1d import ProfileProblem, compare_to_closed_form, minimize_profile
from .quad import QuadConfig, QuadResult, integrate, integrate_semi_infinite
from .results import DragEstimate, Method
from .slip import SlipParams, drag_integral_slip, hocking_asym, phi_coeffs, robin_coeffs

__version__ = "0.1.0"

__all__ = [
    "AlphaConstants", "AsymptoticRest", "ContactAt", "CorrugatedDrag", "CorrugationData",
    "DomainError", "DragEstimate", "DynState", "GapProfile", "Indeterminate", "LubriDragError",
    "Method", "MobilityTensor", "NoSlipDrag", "NonConvergence", "NonFinite", "NonFiniteDrag",
    "NumericalError", "ProfileProblem", "QuadConfig", "QuadResult", "SingularSystem",
    "SlipDrag", "SlipParams", "StepFailure", "Trajectory", "Truncated", "asym_drag", "cal_I",
    "cal_J", "check_gaps", "collision_predicate", "compare_to_closed_form", "drag_bounds",
    "drag_integral", "drag_integral_slip", "effective_beta", "gamma_s", "gap", "hocking_asym",
    "integrate", "integrate_semi_infinite", "lambda_alpha", "make_estimator", "minimize_profile",
    "mu_alpha", "phi_coeffs", "regime_beta", "robin_coeffs", "shifted_wall_drag", "simulate",
    "velocity_gap",
]
