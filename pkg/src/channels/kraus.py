"""Operator-sum representation of CP maps and their application"""
from dataclasses import dataclass
from typing import Sequence, Tuple, Union

import numpy as np

from ..linalg.matrices import as_complex_matrix
from ..states.density import BranchEnsemble, DensityOperator, PureState
from ..utils.exceptions import DimensionMismatchError, InputError
from ..utils.logger import setup_logger

logger = setup_logger(__name__)

COMPLETENESS_WARN = 1e-8


@dataclass(frozen=True)
class KrausSet:
    """Kraus operators A_k stacked as a (K, d, d) array"""

    operators: np.ndarray

    @property
    def dim(self) -> int:
        return self.operators.shape[1]

    def __len__(self) -> int:
        return self.operators.shape[0]

    @classmethod
    def from_operators(cls, operators: Sequence[np.ndarray]) -> "KrausSet":
        """
        Stack Kraus operators after checking they share one square shape

        Args:
            operators: Non-empty list of square matrices

        Returns:
            KrausSet
        """
        if not operators:
            raise InputError("A Kraus set needs at least one operator")
        matrices = [as_complex_matrix(op, f"A_{k}") for k, op in enumerate(operators)]
        shapes = {m.shape for m in matrices}
        if len(shapes) != 1 or matrices[0].shape[0] != matrices[0].shape[1]:
            raise DimensionMismatchError(f"Kraus operators must share one square shape, got {shapes}")
        return cls(operators=np.stack(matrices))

    @classmethod
    def identity(cls, dim: int) -> "KrausSet":
        return cls(operators=np.eye(dim, dtype=np.complex128)[None, :, :])

    def completeness_residual(self) -> float:
        """max-abs entry of sum_k A_k^dagger A_k - I"""
        total = np.einsum("kji,kjl->il", self.operators.conj(), self.operators)
        return float(np.max(np.abs(total - np.eye(self.dim))))


def _require_dim(kraus: KrausSet, dim: int, what: str):
    if kraus.dim != dim:
        raise DimensionMismatchError(f"Kraus dimension {kraus.dim} does not match {what} dimension {dim}")


def channel_branches(kraus: KrausSet, state: PureState) -> BranchEnsemble:
    """
    Push a pure state through the channel, keeping the branches A_k|psi>

    Args:
        kraus: Kraus set on the full space
        state: Input pure state

    Returns:
        BranchEnsemble whose columns are A_k|psi>
    """
    _require_dim(kraus, state.dim, "state")
    branches = (kraus.operators @ state.amplitudes).T
    return BranchEnsemble(branches=branches, dims=state.dims)


def apply_channel(kraus: KrausSet, state: Union[DensityOperator, PureState]) -> DensityOperator:
    """
    sum_k A_k rho A_k^dagger

    Args:
        kraus: Kraus set
        state: DensityOperator, or PureState (evaluated through its branches)

    Returns:
        Output density operator
    """
    if isinstance(state, PureState):
        return channel_branches(kraus, state).to_density()

    _require_dim(kraus, state.dim, "state")
    output = np.zeros_like(state.matrix)
    for op in kraus.operators:
        output += op @ state.matrix @ op.conj().T

    trace = float(np.trace(output).real)
    if abs(trace - state.trace()) > COMPLETENESS_WARN:
        logger.warning(f"Channel changed the trace by {trace - state.trace():.3e}")
    return DensityOperator.from_matrix(output, dims=state.dims or None, validate=False)


def _check_bipartite(kraus: KrausSet, dims: Tuple[int, int], subsystem: int):
    if len(dims) != 2:
        raise DimensionMismatchError(f"Expected two subsystem dims, got {dims}")
    if subsystem not in (0, 1):
        raise DimensionMismatchError(f"subsystem must be 0 or 1, got {subsystem}")
    _require_dim(kraus, dims[subsystem], f"subsystem {subsystem}")


def subsystem_branches(kraus: KrausSet, state: PureState, subsystem: int = 0) -> BranchEnsemble:
    """
    (L (x) I) on a bipartite pure state, in branch form

    Args:
        kraus: Kraus set acting on one factor
        state: Bipartite PureState with dims (d_A, d_B)
        subsystem: Factor the channel acts on

    Returns:
        BranchEnsemble with columns (A_k (x) I)|Psi>
    """
    dims = state.dims
    _check_bipartite(kraus, dims, subsystem)
    psi = state.as_matrix()

    if subsystem == 0:
        stacked = kraus.operators @ psi
    else:
        stacked = psi @ kraus.operators.transpose(0, 2, 1)

    branches = stacked.reshape(len(kraus), -1).T
    return BranchEnsemble(branches=branches, dims=dims)


def apply_on_subsystem(
    kraus: KrausSet,
    rho: Union[DensityOperator, PureState],
    subsystem: int,
    dims: Tuple[int, int]
) -> DensityOperator:
    """
    (L (x) I) rho: each A_k acts as kron(A_k, I) (or kron(I, A_k))

    The kron products are contracted index-wise on the reshaped operator
    rather than formed explicitly.

    Args:
        kraus: Kraus set acting on one factor
        rho: Bipartite state
        subsystem: Factor the channel acts on
        dims: (d_A, d_B)

    Returns:
        Output density operator with dims (d_A, d_B)
    """
    dims = tuple(dims)
    _check_bipartite(kraus, dims, subsystem)
    d_a, d_b = dims
    if rho.dim != d_a * d_b:
        raise DimensionMismatchError(f"State dimension {rho.dim} does not match dims {dims}")

    if isinstance(rho, PureState):
        return subsystem_branches(kraus, PureState(rho.amplitudes, dims, rho.truncation_deficit), subsystem).to_density()

    tensor = rho.matrix.reshape(d_a, d_b, d_a, d_b)
    output = np.zeros_like(tensor)
    for op in kraus.operators:
        if subsystem == 0:
            output += np.einsum("ij,jbkd,lk->ibld", op, tensor, op.conj(), optimize=True)
        else:
            output += np.einsum("ij,ajck,lk->aicl", op, tensor, op.conj(), optimize=True)

    return DensityOperator.from_matrix(output.reshape(d_a * d_b, d_a * d_b), dims=dims, validate=False)
