"""Density operators, pure states and factored (branch) ensembles"""
from dataclasses import dataclass, field
from typing import Any, Optional, Tuple

import numpy as np
import scipy.linalg

from ..linalg.matrices import as_complex_matrix, matrix_from_json, matrix_to_json, require_hermitian
from ..utils.exceptions import DimensionMismatchError, InvalidStateError

TRACE_TOL = 1e-10
EIGEN_TOL = 1e-10
NORM_TOL = 1e-12


def fix_global_phase(amplitudes: np.ndarray) -> np.ndarray:
    """Rotate a vector so its first nonzero amplitude is real positive"""
    magnitudes = np.abs(amplitudes)
    if not magnitudes.size or magnitudes.max() == 0:
        return amplitudes
    first = int(np.argmax(magnitudes > 1e-15 * magnitudes.max()))
    pivot = amplitudes[first]
    return amplitudes * (pivot.conj() / abs(pivot))


def _check_dims(dims: Optional[Tuple[int, ...]], dim: int) -> Tuple[int, ...]:
    if dims is None:
        return (dim,)
    dims = tuple(int(d) for d in dims)
    if int(np.prod(dims)) != dim:
        raise DimensionMismatchError(f"Subsystem dims {dims} do not multiply to {dim}")
    return dims


@dataclass(frozen=True)
class DensityOperator:
    """Trace-one positive semidefinite matrix, optionally split into subsystems"""

    matrix: np.ndarray
    dims: Tuple[int, ...] = field(default=())

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def from_matrix(
        cls,
        data: Any,
        dims: Optional[Tuple[int, ...]] = None,
        validate: bool = True
    ) -> "DensityOperator":
        """
        Build a density operator, checking Hermiticity, positivity and trace

        Args:
            data: Square matrix
            dims: Subsystem dimensions (defaults to a single system)
            validate: Skip positivity/trace checks when False (channel outputs)

        Returns:
            DensityOperator with an exactly Hermitian matrix
        """
        matrix = require_hermitian(as_complex_matrix(data, "rho"), name="rho")
        dims = _check_dims(dims, matrix.shape[0])

        if validate:
            trace = float(np.trace(matrix).real)
            if abs(trace - 1.0) > TRACE_TOL:
                raise InvalidStateError(f"Trace is {trace:.12g}, expected 1")
            min_eig = float(scipy.linalg.eigvalsh(matrix)[0])
            if min_eig < -EIGEN_TOL:
                raise InvalidStateError(f"Negative eigenvalue {min_eig:.3e}")

        return cls(matrix=matrix, dims=dims)

    @classmethod
    def from_pure(cls, state: "PureState") -> "DensityOperator":
        return cls(matrix=np.outer(state.amplitudes, state.amplitudes.conj()), dims=state.dims)

    @classmethod
    def maximally_mixed(cls, dim: int) -> "DensityOperator":
        return cls(matrix=np.eye(dim, dtype=np.complex128) / dim, dims=(dim,))

    @classmethod
    def from_json(cls, payload: dict, dims: Optional[Tuple[int, ...]] = None) -> "DensityOperator":
        return cls.from_matrix(matrix_from_json(payload), dims=dims)

    def to_json(self) -> dict:
        return matrix_to_json(self.matrix)

    def trace(self) -> float:
        return float(np.trace(self.matrix).real)

    def min_eigenvalue(self) -> float:
        return float(scipy.linalg.eigvalsh(self.matrix)[0])

    def expectation(self, operator: np.ndarray) -> float:
        """tr[O rho] for a Hermitian O"""
        return float(np.real(np.vdot(operator.conj().T, self.matrix)))


@dataclass(frozen=True)
class PureState:
    """Normalized state vector with the norm lost to Fock truncation"""

    amplitudes: np.ndarray
    dims: Tuple[int, ...] = field(default=())
    truncation_deficit: float = 0.0

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]

    @classmethod
    def from_amplitudes(
        cls,
        amplitudes: Any,
        dims: Optional[Tuple[int, ...]] = None,
        truncation_deficit: float = 0.0
    ) -> "PureState":
        """
        Normalize amplitudes and apply the global phase convention

        Args:
            amplitudes: Unnormalized complex vector
            dims: Subsystem dimensions
            truncation_deficit: 1 - norm captured before renormalization

        Returns:
            PureState
        """
        vector = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
        norm = np.linalg.norm(vector)
        if not np.isfinite(norm) or norm == 0:
            raise InvalidStateError("State vector has zero or non-finite norm")
        vector = fix_global_phase(vector / norm)
        return cls(
            amplitudes=vector,
            dims=_check_dims(dims, vector.shape[0]),
            truncation_deficit=float(max(truncation_deficit, 0.0)),
        )

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def overlap(self, other: "PureState") -> complex:
        """<self|other>"""
        if other.dim != self.dim:
            raise DimensionMismatchError(f"Dimensions differ: {self.dim} vs {other.dim}")
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def to_density(self) -> DensityOperator:
        return DensityOperator.from_pure(self)

    def as_matrix(self) -> np.ndarray:
        """Amplitudes reshaped to (d_A, d_B) for a bipartite state"""
        if len(self.dims) != 2:
            raise DimensionMismatchError(f"Expected a bipartite state, got dims {self.dims}")
        return self.amplitudes.reshape(self.dims)


@dataclass(frozen=True)
class BranchEnsemble:
    """
    Density operator kept in factored form rho = sum_k |v_k><v_k|

    Columns of `branches` are the unnormalized vectors A_k|psi> obtained by
    pushing a pure state through a Kraus set. Two-mode Fock states at the
    default truncation are too large for dense density matrices; every
    quantity the filters need is a sum over branches.
    """

    branches: np.ndarray
    dims: Tuple[int, ...] = field(default=())

    @property
    def dim(self) -> int:
        return self.branches.shape[0]

    def trace(self) -> float:
        return float(np.sum(np.abs(self.branches) ** 2))

    def projector_weight(self, vector: np.ndarray) -> float:
        """<psi|rho|psi> = sum_k |<psi|v_k>|^2"""
        return float(np.sum(np.abs(vector.conj() @ self.branches) ** 2))

    def diagonal(self) -> np.ndarray:
        """Diagonal of rho in the computational basis"""
        return np.sum(np.abs(self.branches) ** 2, axis=1)

    def to_density(self) -> DensityOperator:
        matrix = self.branches @ self.branches.conj().T
        return DensityOperator.from_matrix(matrix, dims=self.dims or None, validate=False)
