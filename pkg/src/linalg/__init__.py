"""Dense complex Hermitian linear algebra"""
from .matrices import (
    as_complex_matrix,
    hermitian_residual,
    kron,
    matrix_from_json,
    matrix_to_json,
    partial_trace,
)
from .spectral import (
    Projector,
    SpectralDecomposition,
    eig_hermitian,
    support_projector,
    union_projector,
)

__all__ = [
    "as_complex_matrix",
    "hermitian_residual",
    "kron",
    "matrix_from_json",
    "matrix_to_json",
    "partial_trace",
    "Projector",
    "SpectralDecomposition",
    "eig_hermitian",
    "support_projector",
    "union_projector",
]
