"""Scikit-learn style wrappers around the drag models.

Each estimator is configured by its constructor parameters, validated in
``fit`` and evaluated on an array of gaps by ``predict``. Nothing is learned
from data; ``fit`` accepts and ignores ``X`` and ``y`` so the objects compose
with ``sklearn`` tooling (``get_params``, ``clone``, pipelines). Instances are
also plain callables ``h -> F(h)`` and can be handed to
:func:`lubridrag.dynamics.simulate`.
"""

from __future__ import annotations

import math

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .corrugated import CorrugationData, MobilityTensor, drag_bounds, effective_beta, shifted_wall_drag
from .exceptions import DomainError
from .geometry import DEFAULT_R0, GapProfile
from .noslip import AlphaConstants, asym_drag, drag_integral
from .quad import QuadConfig
from .results import DragEstimate
from .slip import SlipParams, drag_integral_slip, hocking_asym


def check_gaps(X) -> np.ndarray:
    """Validate gaps given as a 1-D array or a single-column 2-D array.

    Returns a flat float array; every entry must be finite and positive.
    """
    arr = np.asarray(X, dtype=float)
    if arr.ndim == 0:
        arr = arr.reshape(1, 1)
    elif arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    arr = check_array(arr, dtype=float, ensure_all_finite=True)
    if arr.shape[1] != 1:
        raise DomainError(f"expected a single column of gaps, got shape {arr.shape}")
    h = arr[:, 0]
    if np.any(h <= 0.0):
        raise DomainError("gaps must be > 0")
    return h


class _DragEstimator(RegressorMixin, BaseEstimator):
    _methods: tuple = ()

    def _check_method(self):
        if self.method not in self._methods:
            raise DomainError(f"method must be one of {self._methods}, got {self.method!r}")

    def _config(self):
        return QuadConfig(abs_tol=self.tol, rel_tol=self.tol)

    def estimate(self, h) -> DragEstimate:
        """Full :class:`DragEstimate` at a single gap."""
        check_is_fitted(self, "is_fitted_")
        h = float(check_gaps([h])[0])
        return self._estimate(h)

    def predict(self, X) -> np.ndarray:
        check_is_fitted(self, "is_fitted_")
        return np.array([self._estimate(float(h)).value for h in check_gaps(X)])

    def __call__(self, h) -> float:
        if not hasattr(self, "is_fitted_"):
            self.fit()
        return self.estimate(h).value


class NoSlipDrag(_DragEstimator):
    """No-slip drag on a smooth or rough sphere.

    Parameters
    ----------
    eps : float
        Roughness amplitude; zero gives the smooth sphere.
    alpha : float
        Roughness exponent in ``[0, 1)``.
    r0 : float
        Cut-off radius of the lubrication integral.
    method : {"exact", "asymptotic"}
        Quadrature of the reduced integral, or the closed-form regime law.
    tol : float
        Quadrature tolerance (absolute and relative).
    """

    _methods = ("exact", "asymptotic")

    def __init__(self, eps=0.0, alpha=0.0, r0=DEFAULT_R0, method="exact", tol=1e-10):
        self.eps = eps
        self.alpha = alpha
        self.r0 = r0
        self.method = method
        self.tol = tol

    def fit(self, X=None, y=None):
        self._check_method()
        # eps = 0 is the smooth sphere; alpha is still range-checked
        self.profile_ = GapProfile.rough(self.eps, self.alpha, r0=self.r0)
        self.cfg_ = self._config()
        if self.method == "asymptotic":
            self.constants_ = AlphaConstants.compute(self.alpha)
        self.is_fitted_ = True
        return self

    def _estimate(self, h):
        if self.method == "asymptotic":
            return asym_drag(h, self.eps, self.alpha)
        return drag_integral(self.profile_, h, self.cfg_)


class SlipDrag(_DragEstimator):
    """Drag with Navier slip on the solid (``beta_s``) and the wall (``beta_p``).

    ``method="hocking"`` uses the small-gap logarithmic law and ignores the
    surface roughness.
    """

    _methods = ("exact", "hocking")

    def __init__(self, beta_s=1.0, beta_p=1.0, eps=0.0, alpha=0.0, r0=DEFAULT_R0,
                 method="exact", tol=1e-10):
        self.beta_s = beta_s
        self.beta_p = beta_p
        self.eps = eps
        self.alpha = alpha
        self.r0 = r0
        self.method = method
        self.tol = tol

    def fit(self, X=None, y=None):
        self._check_method()
        self.slip_ = SlipParams(self.beta_s, self.beta_p)
        self.slip_.require_positive()
        # eps = 0 is the smooth sphere; alpha is still range-checked
        self.profile_ = GapProfile.rough(self.eps, self.alpha, r0=self.r0)
        self.cfg_ = self._config()
        self.is_fitted_ = True
        return self

    def _estimate(self, h):
        if self.method == "hocking":
            return hocking_asym(h, self.slip_)
        return drag_integral_slip(self.profile_, h, self.slip_, self.cfg_)


class CorrugatedDrag(_DragEstimator):
    """Sphere above a corrugated wall.

    Parameters
    ----------
    eps : float
        Corrugation amplitude (> 0).
    depth : float
        ``-min gamma`` of the cell profile.
    beta_x, beta_y : float
        Eigenvalues of the mobility tensor.
    method : {"shifted", "lower", "upper"}
        Shifted-wall approximation ``6 pi / (h + eps beta)`` or one of the
        flat-wall bounds.
    """

    _methods = ("shifted", "lower", "upper")

    def __init__(self, eps=1e-3, depth=1.0, beta_x=1.0, beta_y=1.0, method="shifted", tol=1e-10):
        self.eps = eps
        self.depth = depth
        self.beta_x = beta_x
        self.beta_y = beta_y
        self.method = method
        self.tol = tol

    def fit(self, X=None, y=None):
        self._check_method()
        self.corrugation_ = CorrugationData(self.eps, self.depth)
        self.beta_eff_ = effective_beta(MobilityTensor(self.beta_x, self.beta_y))
        self.is_fitted_ = True
        return self

    def _estimate(self, h):
        if self.method == "shifted":
            return shifted_wall_drag(h, self.eps, self.beta_eff_)
        lower, upper = drag_bounds(h, self.corrugation_)
        return lower if self.method == "lower" else upper


def make_estimator(model: str, **params) -> _DragEstimator:
    """Build and fit an estimator by model name (``noslip``, ``slip``, ``corrugated``)."""
    classes = {"noslip": NoSlipDrag, "slip": SlipDrag, "corrugated": CorrugatedDrag}
    try:
        cls = classes[model]
    except KeyError:
        raise DomainError(f"unknown model {model!r}; expected one of {sorted(classes)}") from None
    known = cls._get_param_names()
    unknown = set(params) - set(known)
    if unknown:
        raise DomainError(f"parameters {sorted(unknown)} do not apply to model {model!r}")
    for k, v in params.items():
        if isinstance(v, float) and not math.isfinite(v):
            raise DomainError(f"{k} must be finite, got {v}")
    return cls(**params).fit()
