"""Hermitian eigendecomposition, support projectors and subspace unions"""
from dataclasses import dataclass
from typing import Any, Optional, Sequence

import numpy as np
import scipy.linalg

from .matrices import as_complex_matrix, require_hermitian
from ..utils.config import Config
from ..utils.exceptions import DimensionMismatchError, InputError, InvalidStateError
from ..utils.logger import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues in descending order with matching orthonormal eigenvector columns"""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self) -> int:
        return self.eigenvectors.shape[0]

    def reconstruct(self) -> np.ndarray:
        """Sum of lambda_k |v_k><v_k|"""
        return (self.eigenvectors * self.eigenvalues) @ self.eigenvectors.conj().T

    def orthonormality_residual(self) -> float:
        """Max-abs deviation of <v_i|v_j> from delta_ij"""
        gram = self.eigenvectors.conj().T @ self.eigenvectors
        return float(np.max(np.abs(gram - np.eye(gram.shape[0]))))


@dataclass(frozen=True)
class Projector:
    """Hermitian idempotent matrix together with its rank"""

    matrix: np.ndarray
    rank: int

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def from_vectors(cls, columns: np.ndarray) -> "Projector":
        """
        Projector onto the span of orthonormal columns

        Args:
            columns: dim x rank matrix with orthonormal columns

        Returns:
            Projector V V^dagger
        """
        columns = np.asarray(columns, dtype=np.complex128)
        if columns.ndim == 1:
            columns = columns[:, None]
        return cls(matrix=columns @ columns.conj().T, rank=columns.shape[1])

    @classmethod
    def zero(cls, dim: int) -> "Projector":
        return cls(matrix=np.zeros((dim, dim), dtype=np.complex128), rank=0)

    def complement(self) -> "Projector":
        """I - P"""
        return Projector(matrix=np.eye(self.dim, dtype=np.complex128) - self.matrix, rank=self.dim - self.rank)

    def idempotency_residual(self) -> float:
        return float(np.max(np.abs(self.matrix @ self.matrix - self.matrix)))


def _fix_phases(vectors: np.ndarray) -> np.ndarray:
    """Make the largest-magnitude component of each column real positive"""
    idx = np.argmax(np.abs(vectors), axis=0)
    pivots = vectors[idx, np.arange(vectors.shape[1])]
    phases = np.ones_like(pivots)
    nonzero = np.abs(pivots) > 0
    phases[nonzero] = pivots[nonzero].conj() / np.abs(pivots[nonzero])
    return vectors * phases


def eig_hermitian(h: Any, tol: float = 1e-10) -> SpectralDecomposition:
    """
    Eigendecomposition of a Hermitian matrix

    Args:
        h: Square Hermitian matrix
        tol: Allowed max-abs asymmetry |H - H^dagger|

    Returns:
        SpectralDecomposition with eigenvalues in descending order
    """
    matrix = require_hermitian(as_complex_matrix(h, "H"), tol=tol, name="H")
    eigenvalues, eigenvectors = scipy.linalg.eigh(matrix)

    eigenvalues = eigenvalues[::-1].copy()
    eigenvectors = _fix_phases(eigenvectors[:, ::-1])

    return SpectralDecomposition(eigenvalues=eigenvalues, eigenvectors=eigenvectors)


def _threshold_projector(spectral: SpectralDecomposition, rel_tol: float) -> Projector:
    cutoff = rel_tol * spectral.eigenvalues[0]
    keep = spectral.eigenvalues > cutoff
    return Projector.from_vectors(spectral.eigenvectors[:, keep])


def support_projector(rho: Any, rel_tol: Optional[float] = None) -> Projector:
    """
    Projector onto the support of a density operator

    Args:
        rho: DensityOperator (or its matrix)
        rel_tol: Eigenvalues at or below rel_tol * lambda_max count as zero

    Returns:
        Projector onto span of eigenvectors with significant eigenvalues
    """
    rel_tol = Config.REL_TOL if rel_tol is None else rel_tol
    if not 0.0 < rel_tol < 1.0:
        raise InputError(f"rel_tol must lie in (0, 1), got {rel_tol}")

    spectral = eig_hermitian(getattr(rho, "matrix", rho))
    if spectral.eigenvalues[0] <= 0:
        raise InvalidStateError("Density operator has no positive eigenvalue")

    projector = _threshold_projector(spectral, rel_tol)
    logger.debug(f"Support projector: rank {projector.rank} of {projector.dim}")
    return projector


def union_projector(projectors: Sequence[Projector], rel_tol: Optional[float] = None) -> Projector:
    """
    Projector onto the span of several column spaces

    The span is read off the sum of the projectors, whose kernel is the
    intersection of their kernels.

    Args:
        projectors: Projectors of equal dimension
        rel_tol: Relative eigenvalue cutoff for the summed operator

    Returns:
        Projector onto the union subspace
    """
    rel_tol = Config.REL_TOL if rel_tol is None else rel_tol
    if not projectors:
        raise InputError("union_projector needs at least one projector")

    dims = {p.dim for p in projectors}
    if len(dims) != 1:
        raise DimensionMismatchError(f"Projectors have different dimensions: {sorted(dims)}")

    total = sum(p.matrix for p in projectors)
    spectral = eig_hermitian(total)
    if spectral.eigenvalues[0] <= 0:
        return Projector.zero(projectors[0].dim)

    return _threshold_projector(spectral, rel_tol)
