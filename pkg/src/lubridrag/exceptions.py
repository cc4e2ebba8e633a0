"""Exception hierarchy.

Everything raised on purpose by this package derives from
:class:`LubriDragError`. Numerical failures (as opposed to bad input) derive
from :class:`NumericalError`; the CLI maps those to exit status 1.
"""


class LubriDragError(Exception):
    """Base class for all package errors."""

    kind = "error"


class DomainError(LubriDragError, ValueError):
    """An argument lies outside the domain of the requested operation."""

    kind = "domain_error"


class NumericalError(LubriDragError, ArithmeticError):
    kind = "numerical_error"


class NonConvergence(NumericalError):
    """Adaptive quadrature could not meet its tolerance."""

    kind = "non_convergence"


class NonFinite(NumericalError):
    """An integrand returned inf or nan."""

    kind = "non_finite"


class SingularSystem(NumericalError):
    kind = "singular_system"


class StepFailure(NumericalError):
    """The ODE step size collapsed below the representable minimum."""

    kind = "step_failure"


class NonFiniteDrag(NumericalError):
    kind = "non_finite_drag"


class Indeterminate(NumericalError):
    """Divergence of an improper integral could not be classified."""

    kind = "indeterminate"
