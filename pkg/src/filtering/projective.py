"""
Implicit projective filters

Two-mode Fock spaces at working truncations are too large to hold the
POVM as a dense matrix. These filters evaluate tr[Pi_0 rho] directly from
a state in dense, pure or branch form.
"""
from dataclasses import dataclass
from typing import Union

import numpy as np

from .povm import Povm
from ..states.density import BranchEnsemble, DensityOperator, PureState
from ..utils.exceptions import DimensionMismatchError

AnyState = Union[DensityOperator, PureState, BranchEnsemble]


def _check_dim(expected: int, state: AnyState):
    if state.dim != expected:
        raise DimensionMismatchError(f"State dimension {state.dim} differs from filter dimension {expected}")


@dataclass(frozen=True)
class RankOneFilter:
    """Pi_1 = |psi><psi|, the optimal filter against a pure probe"""

    vector: np.ndarray

    @classmethod
    def from_state(cls, psi: PureState) -> "RankOneFilter":
        return cls(vector=psi.amplitudes / psi.norm())

    @property
    def dim(self) -> int:
        return self.vector.shape[0]

    def rejection_weight(self, state: AnyState) -> float:
        """<psi|rho|psi>"""
        _check_dim(self.dim, state)
        if isinstance(state, BranchEnsemble):
            return state.projector_weight(self.vector)
        if isinstance(state, PureState):
            return float(abs(np.vdot(self.vector, state.amplitudes)) ** 2)
        return float(np.real(self.vector.conj() @ state.matrix @ self.vector))

    def detection_probability(self, state: AnyState) -> float:
        return float(np.clip(1.0 - self.rejection_weight(state), 0.0, 1.0))

    def povm(self) -> Povm:
        projector = np.outer(self.vector, self.vector.conj())
        return Povm(elements=(np.eye(self.dim, dtype=np.complex128) - projector, projector))


@dataclass(frozen=True)
class PhotonDifferenceFilter:
    """
    Pi_1 = sum_n |n>|n><n|<n|: reject whenever both modes carry the same
    photon number. Zero false alarm on a two-mode squeezed vacuum, whose
    support lies inside the equal-number subspace.
    """

    n_levels: int

    @property
    def dim(self) -> int:
        return self.n_levels * self.n_levels

    def _pair_indices(self) -> np.ndarray:
        n = np.arange(self.n_levels)
        return n * self.n_levels + n

    def rejection_weight(self, state: AnyState) -> float:
        """sum_n <n,n|rho|n,n>"""
        _check_dim(self.dim, state)
        idx = self._pair_indices()
        if isinstance(state, BranchEnsemble):
            return float(np.sum(np.abs(state.branches[idx, :]) ** 2))
        if isinstance(state, PureState):
            return float(np.sum(np.abs(state.amplitudes[idx]) ** 2))
        return float(np.sum(np.real(np.diag(state.matrix)[idx])))

    def detection_probability(self, state: AnyState) -> float:
        return float(np.clip(1.0 - self.rejection_weight(state), 0.0, 1.0))

    def povm(self) -> Povm:
        diagonal = np.zeros(self.dim)
        diagonal[self._pair_indices()] = 1.0
        rejected = np.diag(diagonal).astype(np.complex128)
        return Povm(elements=(np.eye(self.dim, dtype=np.complex128) - rejected, rejected))
