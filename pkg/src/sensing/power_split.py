"""Optimal split of a photon budget between displacement and squeezing"""
from dataclasses import dataclass
from typing import Callable, Tuple

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from .detection import DetectionProbability
from .probes import AcceptanceProbability, ProbeKind
from .thresholds import PacLike, bisect_loss, n_min
from ..states.budget import PowerBudget
from ..utils.exceptions import InputError, InsufficientPowerError
from ..utils.logger import setup_logger

logger = setup_logger(__name__)

COARSE_POINTS = 64
SPLIT_XATOL = 1e-6


@dataclass(frozen=True)
class PowerSplit:
    """Best phase-matched squeezed probe for a given <n>"""

    n_total: float
    m_bar_opt: float
    R_M_opt: float

    @property
    def ratio(self) -> float:
        return self.m_bar_opt / self.n_total if self.n_total > 0 else 0.0

    def __iter__(self):
        return iter((self.m_bar_opt, self.R_M_opt))


def _budget(n_total: float, m_bar: float) -> PowerBudget:
    m_bar = float(np.clip(m_bar, 0.0, n_total))
    return PowerBudget(n_total=n_total, m_bar=m_bar, n_bar=n_total - m_bar)


def _scan_then_refine(fn: Callable[[float], float], upper: float, xatol: float) -> Tuple[float, float]:
    """
    Minimize fn on [0, upper]

    A coarse grid picks the bracket around its best point, then a bounded
    Brent search refines inside it. Returns (x, fn(x)).
    """
    grid = np.linspace(0.0, upper, COARSE_POINTS)
    values = np.array([fn(x) for x in grid])
    best = int(np.argmin(values))
    if upper <= 0:
        return float(grid[best]), float(values[best])

    lo = grid[max(best - 1, 0)]
    hi = grid[min(best + 1, COARSE_POINTS - 1)]
    refined = minimize_scalar(fn, bounds=(lo, hi), method="bounded", options={"xatol": xatol})

    if refined.success and refined.fun <= values[best]:
        return float(refined.x), float(refined.fun)
    return float(grid[best]), float(values[best])


def optimize_power_split(n_total: float, p_ac: PacLike) -> PowerSplit:
    """
    Minimize R_M over m_bar in [0, n_total] at theta = phi = 0

    Splits that cannot reach P_ac score 1 + (P_ac - P(R=1)), which keeps
    the objective continuous and above every feasible R_M.

    Args:
        n_total: Total mean photon number
        p_ac: Acceptance probability

    Returns:
        PowerSplit with the optimal m_bar and R_M

    Raises:
        InsufficientPowerError: no split reaches P_ac
    """
    p = float(AcceptanceProbability.coerce(p_ac))
    if n_total <= 0:
        raise InputError(f"n_total must be positive, got {n_total}")

    def objective(m_bar: float) -> float:
        budget = _budget(n_total, m_bar)

        def probability(R: float) -> float:
            return DetectionProbability.squeezed(budget, 0.0, 0.0, R)

        top = probability(1.0)
        if top < p:
            return 1.0 + (p - top)
        return bisect_loss(probability, p, float("nan"), n_total)

    m_bar, loss = _scan_then_refine(objective, n_total, SPLIT_XATOL * n_total)
    if loss > 1.0:
        raise InsufficientPowerError(n_min_optimized(p), n_total)

    logger.debug(f"Power split n={n_total:.6g}: m_bar={m_bar:.6g}, R_M={loss:.12g}")
    return PowerSplit(n_total=n_total, m_bar_opt=m_bar, R_M_opt=loss)


def best_full_loss_probability(n_total: float) -> float:
    """max over m_bar of P(R = 1) for a phase-matched squeezed probe"""
    if n_total <= 0:
        return 0.0

    def negative(m_bar: float) -> float:
        return -DetectionProbability.squeezed(_budget(n_total, m_bar), 0.0, 0.0, 1.0)

    _, value = _scan_then_refine(negative, n_total, SPLIT_XATOL * n_total)
    return -value


def n_min_optimized(p_ac: PacLike) -> float:
    """
    Smallest <n> for which some photon split reaches P_ac

    Args:
        p_ac: Acceptance probability

    Returns:
        <n>_min of the power-split-optimized squeezed probe (about 0.59 at P_ac = 1/2)
    """
    p = float(AcceptanceProbability.coerce(p_ac))
    hi = n_min(ProbeKind.COHERENT, p)

    def gap(n_total: float) -> float:
        return best_full_loss_probability(n_total) - p

    if gap(hi) <= 0:
        return hi
    value = float(brentq(gap, 0.0, hi, xtol=1e-12))
    logger.debug(f"Optimized squeezed probe: n_min={value:.12g} at P_ac={p}")
    return value
