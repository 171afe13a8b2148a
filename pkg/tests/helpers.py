"""Random states and operators shared by the test modules"""
import numpy as np

from src.states.density import DensityOperator, PureState


def random_hermitian(rng: np.random.Generator, dim: int) -> np.ndarray:
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return 0.5 * (a + a.conj().T)


def random_density(rng: np.random.Generator, dim: int, rank: int = None) -> DensityOperator:
    """Random mixed state of the given rank (full rank by default)"""
    rank = dim if rank is None else rank
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    matrix = g @ g.conj().T
    return DensityOperator.from_matrix(matrix / np.trace(matrix).real)


def random_pure(rng: np.random.Generator, dim: int, dims=None) -> PureState:
    return PureState.from_amplitudes(rng.normal(size=dim) + 1j * rng.normal(size=dim), dims=dims)


def basis_dyad(dim: int, k: int) -> DensityOperator:
    matrix = np.zeros((dim, dim), dtype=np.complex128)
    matrix[k, k] = 1.0
    return DensityOperator.from_matrix(matrix)


def vector_dyad(vector) -> DensityOperator:
    vector = np.asarray(vector, dtype=np.complex128)
    vector = vector / np.linalg.norm(vector)
    return DensityOperator.from_matrix(np.outer(vector, vector.conj()))


def annihilation_operator(n_levels: int) -> np.ndarray:
    """Truncated annihilation operator with sqrt(1..n-1) on the superdiagonal"""
    return np.diag(np.sqrt(np.arange(1, n_levels)), k=1).astype(np.complex128)
