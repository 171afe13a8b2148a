"""n-dimensional depolarizing channel"""
from dataclasses import dataclass

import numpy as np

from .kraus import KrausSet
from ..states.density import DensityOperator
from ..utils.exceptions import DimensionMismatchError, InputError


@dataclass(frozen=True)
class DepolarizingChannel:
    """L_D rho = (1 - p) rho + (p / n) I"""

    dim: int
    p: float

    def __post_init__(self):
        if self.dim < 1:
            raise InputError(f"Dimension must be positive, got {self.dim}")
        if not 0.0 <= self.p <= 1.0:
            raise InputError(f"Depolarizing probability must be in [0, 1], got {self.p}")


def depolarize(rho: DensityOperator, channel: DepolarizingChannel) -> DensityOperator:
    """
    Mix a state with the maximally mixed state

    Args:
        rho: Input density operator of dimension channel.dim
        channel: Depolarizing channel

    Returns:
        (1 - p) rho + (p / n) I
    """
    if rho.dim != channel.dim:
        raise DimensionMismatchError(f"State dimension {rho.dim} differs from channel dimension {channel.dim}")
    identity = np.eye(channel.dim, dtype=np.complex128)
    matrix = (1.0 - channel.p) * rho.matrix + (channel.p / channel.dim) * identity
    return DensityOperator.from_matrix(matrix, dims=rho.dims or None, validate=False)


def depolarizing_kraus(channel: DepolarizingChannel) -> KrausSet:
    """
    Kraus form {sqrt(1 - p) I} + {sqrt(p / n) |i><j|}

    sum_ij (p/n)|i><j| rho |j><i| = (p/n) tr(rho) I, so the set reproduces
    depolarize() and can act on one arm of an entangled probe.

    Args:
        channel: Depolarizing channel

    Returns:
        KrausSet with n^2 + 1 operators (1 when p = 0)
    """
    n, p = channel.dim, channel.p
    operators = [np.sqrt(1.0 - p) * np.eye(n, dtype=np.complex128)]
    if p > 0:
        scale = np.sqrt(p / n)
        for i in range(n):
            for j in range(n):
                unit = np.zeros((n, n), dtype=np.complex128)
                unit[i, j] = scale
                operators.append(unit)
    return KrausSet.from_operators(operators)
