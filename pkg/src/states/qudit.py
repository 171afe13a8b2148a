"""Schmidt-form entangled qudit probes"""
from dataclasses import dataclass
from typing import Any

import numpy as np

from .density import PureState
from ..utils.exceptions import DimensionMismatchError, InvalidStateError

SCHMIDT_TOL = 1e-12


@dataclass(frozen=True)
class SchmidtVector:
    """Nonnegative Schmidt coefficients lambda_k summing to one"""

    coefficients: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.coefficients, dtype=np.float64).reshape(-1)
        if values.size == 0:
            raise InvalidStateError("Schmidt vector is empty")
        if np.any(values < 0):
            raise InvalidStateError(f"Schmidt coefficients must be nonnegative: {values}")
        if abs(values.sum() - 1.0) > SCHMIDT_TOL:
            raise InvalidStateError(f"Schmidt coefficients sum to {values.sum():.15g}, expected 1")
        object.__setattr__(self, "coefficients", values)

    @property
    def n(self) -> int:
        return self.coefficients.size

    @classmethod
    def uniform(cls, n: int) -> "SchmidtVector":
        return cls(np.full(n, 1.0 / n))

    @classmethod
    def normalized(cls, weights: Any) -> "SchmidtVector":
        """Rescale nonnegative weights to sum to one"""
        weights = np.asarray(weights, dtype=np.float64)
        return cls(weights / weights.sum())


def schmidt_entangled_qudit(lambdas: SchmidtVector, n: int) -> PureState:
    """
    |Psi> = sum_k sqrt(lambda_k) |k>|k> on C^n (x) C^n

    Args:
        lambdas: Schmidt coefficients
        n: Local dimension

    Returns:
        PureState with dims (n, n)
    """
    if lambdas.n != n:
        raise DimensionMismatchError(f"Got {lambdas.n} Schmidt coefficients for dimension {n}")
    amplitudes = np.diag(np.sqrt(lambdas.coefficients)).astype(np.complex128).reshape(-1)
    return PureState.from_amplitudes(amplitudes, dims=(n, n))


def schmidt_spectrum(state: PureState) -> np.ndarray:
    """Squared singular values of a bipartite state, descending"""
    singular_values = np.linalg.svd(state.as_matrix(), compute_uv=False)
    return singular_values ** 2
