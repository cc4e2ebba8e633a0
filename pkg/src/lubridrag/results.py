"""Result records shared by the drag modules."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from enum import Enum
from typing import Optional


class Method(str, Enum):
    EXACT_INTEGRAL = "exact_integral"
    ASYMPTOTIC = "asymptotic"
    LOWER_BOUND = "lower_bound"
    UPPER_BOUND = "upper_bound"


@dataclass(frozen=True)
class DragEstimate:
    """A drag value together with how it was obtained.

    ``regime`` is the dimensionless group that decides whether an asymptotic
    formula applies (roughness ``beta``, ``h / slip length`` or ``eps / h``),
    and is set exactly when ``method`` is ``ASYMPTOTIC``. ``warning`` is set
    when the inputs fall outside the formula's intended regime.
    """

    value: float
    method: Method
    regime: Optional[float] = None
    err_estimate: Optional[float] = None
    branch: Optional[str] = None
    warning: Optional[str] = None

    def __post_init__(self):
        if (self.regime is not None) != (self.method is Method.ASYMPTOTIC):
            raise ValueError("regime must be given exactly for asymptotic estimates")

    def __float__(self):
        return float(self.value)

    def to_dict(self):
        d = asdict(self)
        d["method"] = self.method.value
        return {k: v for k, v in d.items() if v is not None}
