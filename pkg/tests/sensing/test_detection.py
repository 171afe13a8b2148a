import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.sensing.detection import (
    DetectionProbability,
    p_depol,
    p_depol_entangled,
    p_loss_bright_squeezed,
    p_loss_coherent,
    p_loss_squeezed,
    p_loss_sv,
    p_loss_tmsv,
    p_loss_tmsv_photodiff,
    phase_scan,
)
from src.sensing.probes import ProbeSpec
from src.states.budget import PowerBudget
from src.states.qudit import SchmidtVector
from src.utils.exceptions import InputError, InvalidDimensionError

LOSSES = np.linspace(0.0, 1.0, 41)


class TestDepolarizing:
    def test_values(self):
        assert p_depol(2, 0.0) == 0.0
        assert p_depol(2, 0.5) == pytest.approx(0.25)
        assert p_depol(1000, 1.0) == pytest.approx(0.999)

    def test_needs_two_levels(self):
        with pytest.raises(InvalidDimensionError):
            p_depol(1, 0.5)

    def test_probability_range(self):
        with pytest.raises(InputError):
            p_depol(2, 1.5)

    def test_entangled_values(self):
        assert p_depol_entangled(SchmidtVector(np.array([1.0, 0.0, 0.0])), 0.6) == pytest.approx(p_depol(3, 0.6))
        assert p_depol_entangled(SchmidtVector.uniform(2), 1.0) == pytest.approx(0.75)
        assert p_depol_entangled(SchmidtVector.uniform(4), 0.0) == 0.0

    def test_uniform_schmidt_vector_is_best(self, rng):
        for _ in range(50):
            n = int(rng.integers(2, 8))
            lambdas = SchmidtVector.normalized(rng.dirichlet(np.ones(n)))
            assert p_depol_entangled(lambdas, 0.7) <= p_depol_entangled(SchmidtVector.uniform(n), 0.7) + 1e-12

    def test_entanglement_helps(self):
        assert p_depol_entangled(SchmidtVector.uniform(3), 0.4) > p_depol(3, 0.4)


class TestLoss:
    def test_coherent(self):
        assert p_loss_coherent(1.0, 0.0) == 0.0
        assert p_loss_coherent(1.0, 0.5) == pytest.approx(1.0 - np.exp(-(1.0 - np.sqrt(0.5)) ** 2), abs=1e-15)
        assert p_loss_coherent(1.0, 0.5) == pytest.approx(0.082208, abs=1e-6)
        assert p_loss_coherent(2.5, 1.0) == pytest.approx(1.0 - np.exp(-2.5))

    def test_squeezed_example(self):
        budget = PowerBudget.from_parameters(1.0, 0.5)
        assert p_loss_squeezed(budget, 0.0, 0.0, 0.2) == pytest.approx(0.069924, abs=1e-6)

    @pytest.mark.parametrize("phi", [0.0, 0.7, 2.0])
    def test_squeezed_without_squeezing_is_coherent(self, phi):
        budget = PowerBudget.from_ratio(3.0, 0.0)
        for R in (0.1, 0.5, 0.9):
            assert p_loss_squeezed(budget, 1.3, phi, R) == pytest.approx(p_loss_coherent(3.0, R), abs=1e-12)

    def test_squeezed_without_displacement_is_sv(self):
        budget = PowerBudget.from_ratio(2.0, 1.0)
        for R in (0.1, 0.5, 0.9):
            assert p_loss_squeezed(budget, 0.4, 0.0, R) == pytest.approx(p_loss_sv(2.0, R), abs=1e-12)

    def test_squeezed_vacuum(self):
        assert p_loss_sv(1.0, 0.0) == 0.0
        assert p_loss_sv(1.0, 0.5) == pytest.approx(1.0 - 1.0 / np.sqrt(1.75), abs=1e-15)
        assert p_loss_sv(3.0, 1.0) == pytest.approx(0.5, abs=1e-15)

    def test_tmsv(self):
        assert p_loss_tmsv(1.0, 0.0) == pytest.approx(0.0, abs=1e-15)
        assert p_loss_tmsv(1.0, 0.5) == pytest.approx(0.401761, abs=1e-6)
        assert p_loss_tmsv(1e-9, 0.5) < 1e-8

    def test_tmsv_photodiff(self):
        assert p_loss_tmsv_photodiff(1.0, 0.0) == pytest.approx(0.0, abs=1e-15)
        assert p_loss_tmsv_photodiff(1.0, 0.5) == pytest.approx(1.0 / 3.0, abs=1e-15)

    @settings(max_examples=100, deadline=None)
    @given(
        st.floats(min_value=0.0, max_value=1e4),
        st.floats(min_value=0.0, max_value=1.0),
    )
    def test_photodiff_never_beats_joint_measurement(self, n_mean, R):
        assert p_loss_tmsv_photodiff(n_mean, R) <= p_loss_tmsv(n_mean, R) + 1e-12

    def test_photodiff_within_factor_two(self):
        for R in (1e-4, 1e-2, 0.1):
            assert p_loss_tmsv(100.0, R) / p_loss_tmsv_photodiff(100.0, R) <= 2.0

    @pytest.mark.parametrize(
        "probe",
        [
            ProbeSpec.coherent(2.0),
            ProbeSpec.squeezed(PowerBudget.from_ratio(2.0, 0.3)),
            ProbeSpec.squeezed(PowerBudget.from_ratio(2.0, 0.6), theta=1.0, phi=0.5),
            ProbeSpec.squeezed_vacuum(2.0),
            ProbeSpec.tmsv_optimal(2.0),
            ProbeSpec.tmsv_photodiff(2.0),
        ],
        ids=lambda probe: probe.kind.value,
    )
    def test_nondecreasing_in_loss(self, probe):
        values = np.array([DetectionProbability.for_probe(probe, R) for R in LOSSES])
        assert values[0] == pytest.approx(0.0, abs=1e-15)
        assert np.all(np.diff(values) >= -1e-15)
        assert np.all((values >= -1e-15) & (values <= 1.0))

    def test_loss_range_checked(self):
        with pytest.raises(InputError):
            p_loss_coherent(1.0, 1.2)
        with pytest.raises(InputError):
            p_loss_sv(-1.0, 0.5)


class TestSqueezingPhase:
    @pytest.mark.parametrize("theta", [0.0, 0.8, 2.5])
    def test_best_phase_matches_squeezing(self, theta):
        budget = PowerBudget.from_ratio(2.0, 0.3)
        scan = phase_scan(budget, theta, 0.3)
        step = 2.0 * np.pi / 720
        offset = np.angle(np.exp(1j * (2.0 * scan.best_phi - theta)))
        assert abs(offset) <= 2.0 * step
        matched = p_loss_squeezed(budget, theta, theta / 2.0, 0.3)
        assert matched >= scan.best_probability - 1e-12

    def test_scan_size(self):
        scan = phase_scan(PowerBudget.from_ratio(1.0, 0.5), 0.0, 0.5, points=16)
        assert scan.phis.shape == scan.probabilities.shape == (16,)


def test_bright_squeezed_without_squeezing_is_coherent():
    for R in (0.1, 0.4):
        assert p_loss_bright_squeezed(5.0, 0.0, R) == pytest.approx(p_loss_coherent(5.0, R))
