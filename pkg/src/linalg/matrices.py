"""
Dense complex matrix helpers: validation, tensor products, partial traces
and the JSON matrix format used for CLI state files.
"""
from typing import Any, Dict, List, Tuple

import numpy as np
from pydantic import BaseModel, ValidationError, model_validator

from ..utils.exceptions import (
    DimensionMismatchError,
    NonFiniteError,
    NotHermitianError,
    ParseError,
)

HERMITIAN_TOL = 1e-10


def as_complex_matrix(data: Any, name: str = "matrix") -> np.ndarray:
    """
    Convert input to a finite complex128 2-D array

    Args:
        data: Array-like input
        name: Label used in error messages

    Returns:
        Complex matrix (a copy when conversion was needed)
    """
    matrix = np.asarray(data, dtype=np.complex128)
    if matrix.ndim != 2:
        raise DimensionMismatchError(f"{name} must be 2-D, got shape {matrix.shape}")
    if not np.all(np.isfinite(matrix)):
        raise NonFiniteError(f"{name} contains NaN or Inf entries")
    return matrix


def hermitian_residual(matrix: np.ndarray) -> float:
    """Max-abs entry of H - H^dagger"""
    return float(np.max(np.abs(matrix - matrix.conj().T))) if matrix.size else 0.0


def require_square(matrix: np.ndarray, name: str = "matrix") -> int:
    """Return the dimension of a square matrix or raise"""
    rows, cols = matrix.shape
    if rows != cols:
        raise DimensionMismatchError(f"{name} must be square, got {rows}x{cols}")
    return rows


def require_hermitian(matrix: np.ndarray, tol: float = HERMITIAN_TOL, name: str = "matrix") -> np.ndarray:
    """
    Check Hermitian symmetry and return the exactly symmetrized matrix

    Args:
        matrix: Square complex matrix
        tol: Allowed max-abs asymmetry
        name: Label used in error messages

    Returns:
        (H + H^dagger) / 2
    """
    require_square(matrix, name)
    residual = hermitian_residual(matrix)
    if residual > tol:
        raise NotHermitianError(f"{name} is not Hermitian (residual {residual:.3e} > {tol:.1e})")
    return 0.5 * (matrix + matrix.conj().T)


def kron(a: Any, b: Any) -> np.ndarray:
    """Tensor product A (x) B; dimensions multiply"""
    return np.kron(as_complex_matrix(a, "A"), as_complex_matrix(b, "B"))


def partial_trace(matrix: np.ndarray, dims: Tuple[int, int], keep: int) -> np.ndarray:
    """
    Trace out one factor of a bipartite operator

    Args:
        matrix: Operator on C^{d_A} (x) C^{d_B}
        dims: (d_A, d_B)
        keep: 0 keeps subsystem A, 1 keeps subsystem B

    Returns:
        Reduced operator on the kept subsystem
    """
    d_a, d_b = dims
    if matrix.shape != (d_a * d_b, d_a * d_b):
        raise DimensionMismatchError(f"Operator shape {matrix.shape} does not match dims {dims}")
    if keep not in (0, 1):
        raise DimensionMismatchError(f"keep must be 0 or 1, got {keep}")

    tensor = matrix.reshape(d_a, d_b, d_a, d_b)
    if keep == 0:
        return np.einsum("ijkj->ik", tensor)
    return np.einsum("ijil->jl", tensor)


class MatrixPayload(BaseModel):
    """JSON form of a complex matrix: row-major real and imaginary parts"""

    dim_rows: int
    dim_cols: int
    re: List[float]
    im: List[float]

    @model_validator(mode="after")
    def check_entry_count(self) -> "MatrixPayload":
        """Entry lists must match the declared shape"""
        if self.dim_rows <= 0 or self.dim_cols <= 0:
            raise ValueError(f"Dimensions must be positive, got {self.dim_rows}x{self.dim_cols}")
        expected = self.dim_rows * self.dim_cols
        if len(self.re) != expected or len(self.im) != expected:
            raise ValueError(
                f"Expected {expected} entries, got re={len(self.re)} im={len(self.im)}"
            )
        return self


def matrix_to_json(matrix: np.ndarray) -> Dict[str, Any]:
    """
    Serialize a complex matrix to {dim_rows, dim_cols, re, im}

    Args:
        matrix: 2-D array

    Returns:
        JSON-compatible dictionary
    """
    matrix = as_complex_matrix(matrix)
    rows, cols = matrix.shape
    flat = matrix.reshape(-1)
    return {
        "dim_rows": rows,
        "dim_cols": cols,
        "re": [float(x) for x in flat.real],
        "im": [float(x) for x in flat.imag],
    }


def matrix_from_json(payload: Dict[str, Any]) -> np.ndarray:
    """
    Parse the {dim_rows, dim_cols, re, im} format

    Args:
        payload: Decoded JSON object

    Returns:
        Complex matrix
    """
    try:
        parsed = MatrixPayload.model_validate(payload)
    except ValidationError as e:
        raise ParseError(f"Invalid matrix payload: {e}") from e

    values = np.asarray(parsed.re, dtype=np.float64) + 1j * np.asarray(parsed.im, dtype=np.float64)
    return as_complex_matrix(values.reshape(parsed.dim_rows, parsed.dim_cols))
