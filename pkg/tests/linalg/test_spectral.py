import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.linalg.spectral import Projector, eig_hermitian, support_projector, union_projector
from src.utils.exceptions import InputError, NotHermitianError
from tests.helpers import random_density, random_hermitian

PLUS = np.array([1.0, 1.0]) / np.sqrt(2)


def test_identity():
    spectral = eig_hermitian(np.eye(2))
    np.testing.assert_allclose(spectral.eigenvalues, [1.0, 1.0])
    assert spectral.orthonormality_residual() < 1e-12


def test_diagonal():
    spectral = eig_hermitian(np.diag([1.0, 3.0]))
    np.testing.assert_allclose(spectral.eigenvalues, [3.0, 1.0])
    np.testing.assert_allclose(spectral.eigenvectors, [[0, 1], [1, 0]], atol=1e-15)


def test_two_by_two_by_hand():
    spectral = eig_hermitian(np.array([[2, 1j], [-1j, 2]]))
    np.testing.assert_allclose(spectral.eigenvalues, [3.0, 1.0], atol=1e-14)


def test_not_hermitian():
    with pytest.raises(NotHermitianError):
        eig_hermitian(np.array([[1.0, 2.0], [0.0, 1.0]]))


def test_phase_convention():
    spectral = eig_hermitian(np.array([[2, 1j], [-1j, 3]]))
    for column in spectral.eigenvectors.T:
        pivot = column[np.argmax(np.abs(column))]
        assert abs(pivot.imag) < 1e-15 and pivot.real > 0


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), dim=st.integers(1, 16))
def test_random_hermitian_reconstructs(seed, dim):
    h = random_hermitian(np.random.default_rng(seed), dim)
    spectral = eig_hermitian(h)
    assert np.all(np.diff(spectral.eigenvalues) <= 0)
    assert spectral.orthonormality_residual() <= 1e-12
    assert np.max(np.abs(spectral.reconstruct() - h)) <= 1e-10


def test_support_of_pure_state():
    rho = np.zeros((3, 3))
    rho[0, 0] = 1.0
    projector = support_projector(rho)
    assert projector.rank == 1
    np.testing.assert_allclose(projector.matrix, rho, atol=1e-14)


def test_support_of_maximally_mixed():
    projector = support_projector(np.eye(2) / 2)
    assert projector.rank == 2
    np.testing.assert_allclose(projector.matrix, np.eye(2), atol=1e-14)


def test_support_of_two_dyads():
    plus = np.array([1.0, 1.0, 0.0]) / np.sqrt(2)
    rho = 0.5 * np.diag([1.0, 0.0, 0.0]) + 0.5 * np.outer(plus, plus)
    projector = support_projector(rho)
    assert projector.rank == 2
    np.testing.assert_allclose(projector.matrix, np.diag([1.0, 1.0, 0.0]), atol=1e-12)


def test_rel_tol_range():
    with pytest.raises(InputError):
        support_projector(np.eye(2) / 2, rel_tol=1.5)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), dim=st.integers(2, 8), data=st.data())
def test_support_projector_fixes_state(seed, dim, data):
    rank = data.draw(st.integers(1, dim))
    rho = random_density(np.random.default_rng(seed), dim, rank).matrix
    projector = support_projector(rho)
    assert projector.rank == rank
    assert np.max(np.abs(projector.matrix @ rho - rho)) <= 1e-10
    assert abs(np.trace(projector.matrix @ rho).real - 1.0) <= 1e-10
    assert projector.idempotency_residual() <= 1e-10
    assert abs(np.trace(projector.matrix).real - projector.rank) <= 1e-8


def test_union_of_orthogonal_dyads():
    p0 = Projector.from_vectors(np.array([1.0, 0.0, 0.0]))
    p1 = Projector.from_vectors(np.array([0.0, 1.0, 0.0]))
    union = union_projector([p0, p1])
    assert union.rank == 2
    np.testing.assert_allclose(union.matrix, np.diag([1.0, 1.0, 0.0]), atol=1e-14)


def test_union_is_idempotent(rng):
    p = support_projector(random_density(rng, 4, 2))
    union = union_projector([p, p])
    assert union.rank == 2
    np.testing.assert_allclose(union.matrix, p.matrix, atol=1e-12)


def test_union_of_non_parallel_vectors():
    union = union_projector([Projector.from_vectors(np.array([1.0, 0.0])), Projector.from_vectors(PLUS)])
    assert union.rank == 2
    np.testing.assert_allclose(union.matrix, np.eye(2), atol=1e-12)


def test_union_permutation_invariant(rng):
    projectors = [support_projector(random_density(rng, 6, k)) for k in (1, 2, 1)]
    forward = union_projector(projectors)
    backward = union_projector(projectors[::-1])
    assert forward.rank == backward.rank == 4
    assert np.max(np.abs(forward.matrix - backward.matrix)) <= 1e-12


def test_complement():
    p = Projector.from_vectors(np.array([1.0, 0.0, 0.0]))
    q = p.complement()
    assert q.rank == 2
    np.testing.assert_allclose(q.matrix, np.diag([0.0, 1.0, 1.0]))
