"""Photon budget split between displacement and squeezing"""
from dataclasses import dataclass

import numpy as np

from ..utils.exceptions import InputError

BUDGET_TOL = 1e-12


@dataclass(frozen=True)
class PowerBudget:
    """
    Mean photon budget <n> = n_bar + m_bar

    n_bar = |alpha|^2 photons go to the coherent amplitude and
    m_bar = sinh^2 r photons to squeezing.
    """

    n_total: float
    m_bar: float
    n_bar: float

    def __post_init__(self):
        if self.n_total < 0 or self.m_bar < 0 or self.n_bar < 0:
            raise InputError(f"Photon numbers must be non-negative: {self}")
        if abs(self.n_bar + self.m_bar - self.n_total) > BUDGET_TOL * max(1.0, self.n_total):
            raise InputError(
                f"n_bar + m_bar = {self.n_bar + self.m_bar:.15g} differs from n_total {self.n_total:.15g}"
            )

    @classmethod
    def from_ratio(cls, n_total: float, ratio: float) -> "PowerBudget":
        """
        Split n_total with m_bar = ratio * n_total

        Args:
            n_total: Total mean photon number
            ratio: Fraction of photons spent on squeezing, in [0, 1]

        Returns:
            PowerBudget
        """
        if not 0.0 <= ratio <= 1.0:
            raise InputError(f"Squeezing ratio must be in [0, 1], got {ratio}")
        m_bar = ratio * n_total
        return cls(n_total=n_total, m_bar=m_bar, n_bar=n_total - m_bar)

    @classmethod
    def from_parameters(cls, alpha_abs: float, r: float) -> "PowerBudget":
        n_bar = alpha_abs ** 2
        m_bar = float(np.sinh(r) ** 2)
        return cls(n_total=n_bar + m_bar, m_bar=m_bar, n_bar=n_bar)

    @property
    def squeezing_r(self) -> float:
        return float(np.arcsinh(np.sqrt(self.m_bar)))

    @property
    def alpha_abs(self) -> float:
        return float(np.sqrt(self.n_bar))
