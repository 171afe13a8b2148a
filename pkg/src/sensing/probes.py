"""Probe descriptions, acceptance probability and sensing results"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from ..states.budget import PowerBudget
from ..utils.exceptions import InputError


class ProbeKind(str, Enum):
    """Probe fields whose loss sensitivity has a closed form"""

    COHERENT = "coherent"
    SQUEEZED = "squeezed"
    SQUEEZED_VACUUM = "squeezed_vacuum"
    TMSV_OPTIMAL = "tmsv_optimal"
    TMSV_PHOTODIFF = "tmsv_photodiff"


@dataclass(frozen=True)
class AcceptanceProbability:
    """Detection probability that defines the minimum detectable loss"""

    value: float

    def __post_init__(self):
        if not 0.0 < self.value < 1.0:
            raise InputError(f"Acceptance probability must lie in (0, 1), got {self.value}")

    def __float__(self) -> float:
        return float(self.value)

    @classmethod
    def coerce(cls, value) -> "AcceptanceProbability":
        return value if isinstance(value, cls) else cls(float(value))


@dataclass(frozen=True)
class ProbeSpec:
    """
    Probe kind with its photon budget

    Only squeezed probes carry a PowerBudget and the phases theta
    (squeezing) and phi (displacement); the other kinds are fixed by n_total.
    """

    kind: ProbeKind
    n_total: float
    budget: Optional[PowerBudget] = None
    theta: float = 0.0
    phi: float = 0.0

    def __post_init__(self):
        if self.n_total < 0:
            raise InputError(f"n_total must be non-negative, got {self.n_total}")
        if self.kind == ProbeKind.SQUEEZED:
            if self.budget is None:
                raise InputError("A squeezed probe needs a PowerBudget")
            if abs(self.budget.n_total - self.n_total) > 1e-12 * max(1.0, self.n_total):
                raise InputError(f"Budget total {self.budget.n_total} differs from n_total {self.n_total}")

    @classmethod
    def coherent(cls, n_total: float) -> "ProbeSpec":
        return cls(kind=ProbeKind.COHERENT, n_total=n_total)

    @classmethod
    def squeezed(cls, budget: PowerBudget, theta: float = 0.0, phi: float = 0.0) -> "ProbeSpec":
        return cls(kind=ProbeKind.SQUEEZED, n_total=budget.n_total, budget=budget, theta=theta, phi=phi)

    @classmethod
    def squeezed_vacuum(cls, n_total: float) -> "ProbeSpec":
        return cls(kind=ProbeKind.SQUEEZED_VACUUM, n_total=n_total)

    @classmethod
    def tmsv_optimal(cls, n_total: float) -> "ProbeSpec":
        return cls(kind=ProbeKind.TMSV_OPTIMAL, n_total=n_total)

    @classmethod
    def tmsv_photodiff(cls, n_total: float) -> "ProbeSpec":
        return cls(kind=ProbeKind.TMSV_PHOTODIFF, n_total=n_total)

    @classmethod
    def for_ratio(cls, n_total: float, ratio: float) -> "ProbeSpec":
        """
        Phase-matched squeezed probe with m_bar = ratio * n_total

        The endpoints map onto the coherent and squeezed-vacuum kinds so
        they use their closed forms.
        """
        if ratio == 0.0:
            return cls.coherent(n_total)
        if ratio == 1.0:
            return cls.squeezed_vacuum(n_total)
        return cls.squeezed(PowerBudget.from_ratio(n_total, ratio))


@dataclass(frozen=True)
class SensingResult:
    """Minimum detectable loss of a probe at a given acceptance probability"""

    R_M: float
    n_min: float
    P_at_R: Optional[float] = None
    method: str = "closed_form"

    def to_dict(self) -> dict:
        return {"R_M": self.R_M, "n_min": self.n_min, "P_at_R": self.P_at_R, "method": self.method}
