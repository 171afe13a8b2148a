import numpy as np
import pytest

from src.states.density import BranchEnsemble, DensityOperator, PureState
from src.utils.exceptions import DimensionMismatchError, InvalidStateError, NotHermitianError
from tests.helpers import random_density, random_pure


def test_valid_state(rng):
    rho = random_density(rng, 4, 2)
    assert abs(rho.trace() - 1.0) < 1e-12
    assert rho.min_eigenvalue() > -1e-12
    assert rho.dims == (4,)


def test_trace_checked():
    with pytest.raises(InvalidStateError):
        DensityOperator.from_matrix(np.eye(2))


def test_positivity_checked():
    with pytest.raises(InvalidStateError):
        DensityOperator.from_matrix(np.diag([1.5, -0.5]))


def test_hermiticity_checked():
    with pytest.raises(NotHermitianError):
        DensityOperator.from_matrix([[0.5, 0.5], [0.0, 0.5]])


def test_dims_must_multiply_out():
    with pytest.raises(DimensionMismatchError):
        DensityOperator.from_matrix(np.eye(4) / 4, dims=(2, 3))


def test_json_round_trip(rng):
    rho = random_density(rng, 3)
    np.testing.assert_array_equal(DensityOperator.from_json(rho.to_json()).matrix, rho.matrix)


def test_maximally_mixed():
    rho = DensityOperator.maximally_mixed(3)
    np.testing.assert_allclose(rho.matrix, np.eye(3) / 3)


def test_pure_state_normalized_and_phase_fixed():
    psi = PureState.from_amplitudes([0.0, -2j])
    np.testing.assert_allclose(psi.amplitudes, [0.0, 1.0])
    assert abs(psi.norm() - 1.0) < 1e-12


def test_zero_vector_rejected():
    with pytest.raises(InvalidStateError):
        PureState.from_amplitudes([0.0, 0.0])


def test_overlap(rng):
    psi = random_pure(rng, 5)
    assert abs(psi.overlap(psi) - 1.0) < 1e-12


def test_as_matrix_needs_two_factors(rng):
    with pytest.raises(DimensionMismatchError):
        random_pure(rng, 4).as_matrix()
    assert random_pure(rng, 6, dims=(2, 3)).as_matrix().shape == (2, 3)


def test_branch_ensemble(rng):
    branches = rng.normal(size=(4, 3)) + 1j * rng.normal(size=(4, 3))
    branches /= np.linalg.norm(branches)
    ensemble = BranchEnsemble(branches=branches, dims=(2, 2))
    dense = ensemble.to_density()

    assert abs(ensemble.trace() - 1.0) < 1e-12
    np.testing.assert_allclose(ensemble.diagonal(), np.real(np.diag(dense.matrix)), atol=1e-14)

    vector = random_pure(rng, 4).amplitudes
    expected = np.real(vector.conj() @ dense.matrix @ vector)
    assert abs(ensemble.projector_weight(vector) - expected) < 1e-14
