"""Monte Carlo sampling of POVM outcomes"""
from dataclasses import dataclass

import numpy as np

from .povm import Povm, validate_povm
from ..states.density import DensityOperator
from ..utils.exceptions import InputError, InvalidPovmError
from ..utils.logger import setup_logger

logger = setup_logger(__name__)

ZERO_CLAMP = 1e-10
RESIDUAL_TOL = 1e-9


@dataclass(frozen=True)
class SimulationResult:
    """Outcome counts from repeated measurements of one state"""

    counts: tuple
    trials: int
    seed: int

    @property
    def frequencies(self) -> np.ndarray:
        return np.asarray(self.counts, dtype=float) / self.trials

    def to_dict(self) -> dict:
        return {"trials": self.trials, "seed": self.seed, "counts": list(self.counts)}


def outcome_probabilities(povm: Povm, rho: DensityOperator) -> np.ndarray:
    """
    Sampling distribution over POVM outcomes

    Values at or below 1e-10 are set to exactly zero; the remaining gap to
    one (at most 1e-9) goes to the last, inconclusive outcome.
    """
    probabilities = povm.probabilities(rho)
    probabilities = np.where(probabilities <= ZERO_CLAMP, 0.0, probabilities)
    if np.any(probabilities > 1.0 + RESIDUAL_TOL):
        raise InvalidPovmError(f"Outcome probability exceeds one: {probabilities.max():.12g}")

    residual = 1.0 - probabilities.sum()
    if abs(residual) > RESIDUAL_TOL:
        raise InvalidPovmError(f"Outcome probabilities sum to {1.0 - residual:.12g}")
    probabilities[-1] = max(probabilities[-1] + residual, 0.0)
    return probabilities


def simulate_outcomes(povm: Povm, rho: DensityOperator, trials: int, seed: int) -> SimulationResult:
    """
    Sample measurement outcomes by inverse CDF

    Args:
        povm: Valid POVM
        rho: Measured state
        trials: Number of independent measurements
        seed: Seed of the per-call generator

    Returns:
        SimulationResult whose counts sum to trials
    """
    if trials < 1:
        raise InputError(f"trials must be positive, got {trials}")
    diagnostics = validate_povm(povm)
    if not diagnostics.passed:
        raise InvalidPovmError(
            f"Invalid POVM: completeness residual {diagnostics.completeness_residual:.3e}, "
            f"min eigenvalue {min(diagnostics.min_eigenvalues):.3e}"
        )

    probabilities = outcome_probabilities(povm, rho)
    cdf = np.cumsum(probabilities)
    cdf[-1] = 1.0

    rng = np.random.default_rng(seed)
    outcomes = np.searchsorted(cdf, rng.random(trials), side="right")
    counts = np.bincount(outcomes, minlength=len(povm))

    logger.debug(f"Simulated {trials} trials (seed={seed}): {counts.tolist()}")
    return SimulationResult(counts=tuple(int(c) for c in counts), trials=int(trials), seed=int(seed))
