"""POVM container, false-alarm probability and validity diagnostics"""
from dataclasses import dataclass
from typing import Any, List, Sequence

import numpy as np
import scipy.linalg

from ..linalg.matrices import as_complex_matrix, hermitian_residual, matrix_to_json
from ..states.density import DensityOperator
from ..utils.exceptions import DimensionMismatchError, InvalidPovmError
from ..utils.logger import setup_logger

logger = setup_logger(__name__)

POVM_TOL = 1e-10
FALSE_ALARM_FLOOR = -1e-12


@dataclass(frozen=True)
class Povm:
    """
    Ordered measurement operators

    Element 0 announces the target state rho0; the last element is the
    inconclusive / "other" outcome.
    """

    elements: tuple

    @classmethod
    def from_matrices(cls, matrices: Sequence[Any]) -> "Povm":
        """
        Build a POVM after checking every element is a square matrix of one size

        Args:
            matrices: At least two square matrices

        Returns:
            Povm (positivity and completeness are checked by validate_povm)
        """
        if len(matrices) < 2:
            raise InvalidPovmError(f"A POVM needs at least two elements, got {len(matrices)}")
        elements = tuple(as_complex_matrix(m, f"Pi_{k}") for k, m in enumerate(matrices))
        shapes = {e.shape for e in elements}
        if len(shapes) != 1 or elements[0].shape[0] != elements[0].shape[1]:
            raise DimensionMismatchError(f"POVM elements must share one square shape, got {shapes}")
        return cls(elements=elements)

    @property
    def dim(self) -> int:
        return self.elements[0].shape[0]

    def __len__(self) -> int:
        return len(self.elements)

    def probabilities(self, rho: DensityOperator) -> np.ndarray:
        """tr[Pi_k rho] for every element"""
        if rho.dim != self.dim:
            raise DimensionMismatchError(f"State dimension {rho.dim} differs from POVM dimension {self.dim}")
        return np.array([float(np.real(np.vdot(e.conj().T, rho.matrix))) for e in self.elements])

    def to_json(self) -> List[dict]:
        return [matrix_to_json(e) for e in self.elements]


@dataclass(frozen=True)
class PovmDiagnostics:
    """Outcome of validate_povm"""

    completeness_residual: float
    min_eigenvalues: tuple
    max_eigenvalues: tuple
    hermitian_residuals: tuple
    tol: float

    @property
    def passed(self) -> bool:
        return (
            self.completeness_residual <= self.tol
            and all(h <= self.tol for h in self.hermitian_residuals)
            and all(lo >= -self.tol for lo in self.min_eigenvalues)
            and all(hi <= 1.0 + self.tol for hi in self.max_eigenvalues)
        )

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "completeness_residual": self.completeness_residual,
            "min_eigenvalues": list(self.min_eigenvalues),
            "max_eigenvalues": list(self.max_eigenvalues),
        }


def false_alarm(povm: Povm, rho: DensityOperator) -> float:
    """
    Probability of announcing rho0 when the state is rho

    Args:
        povm: Measurement, element 0 = "rho0 detected"
        rho: State to test, usually rho1

    Returns:
        tr[Pi_0 rho]
    """
    if rho.dim != povm.dim:
        raise DimensionMismatchError(f"State dimension {rho.dim} differs from POVM dimension {povm.dim}")
    value = float(np.real(np.vdot(povm.elements[0].conj().T, rho.matrix)))
    if value < FALSE_ALARM_FLOOR:
        logger.warning(f"False-alarm probability below floor: {value:.3e}")
    return value


def validate_povm(povm: Povm, tol: float = POVM_TOL) -> PovmDiagnostics:
    """
    Check Hermiticity, spectrum in [0, 1] and completeness of every element

    Never raises; inspect the returned diagnostics.
    """
    total = np.zeros((povm.dim, povm.dim), dtype=np.complex128)
    mins, maxs, herm = [], [], []
    for element in povm.elements:
        herm.append(hermitian_residual(element))
        eigenvalues = scipy.linalg.eigvalsh(0.5 * (element + element.conj().T))
        mins.append(float(eigenvalues[0]))
        maxs.append(float(eigenvalues[-1]))
        total += element

    residual = float(np.max(np.abs(total - np.eye(povm.dim))))
    diagnostics = PovmDiagnostics(
        completeness_residual=residual,
        min_eigenvalues=tuple(mins),
        max_eigenvalues=tuple(maxs),
        hermitian_residuals=tuple(herm),
        tol=tol,
    )
    if not diagnostics.passed:
        logger.debug(f"POVM check failed: residual={residual:.3e}, min eig={min(mins):.3e}")
    return diagnostics
