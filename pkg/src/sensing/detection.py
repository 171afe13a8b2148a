"""Closed-form detection probabilities of the optimal loss and noise filters"""
from dataclasses import dataclass

import numpy as np

from .probes import ProbeKind, ProbeSpec
from ..states.budget import PowerBudget
from ..states.qudit import SchmidtVector
from ..utils.exceptions import InputError, InvalidDimensionError
from ..utils.logger import setup_logger

logger = setup_logger(__name__)

PHASE_SCAN_POINTS = 720


def _check_probability(p: float, name: str = "p"):
    if not 0.0 <= p <= 1.0:
        raise InputError(f"{name} must be in [0, 1], got {p}")


def _check_loss(R: float, n: float):
    _check_probability(R, "R")
    if n < 0:
        raise InputError(f"Photon number must be non-negative, got {n}")


def _amplitude_loss(R: float) -> float:
    """1 - sqrt(1 - R), written to stay accurate for small R"""
    return R / (1.0 + np.sqrt(1.0 - R))


def _lambda2(n_mean: float) -> float:
    return n_mean / (1.0 + n_mean)


@dataclass(frozen=True)
class PhaseScan:
    """Detection probability of a squeezed probe over the displacement phase"""

    phis: np.ndarray
    probabilities: np.ndarray

    @property
    def best_phi(self) -> float:
        return float(self.phis[int(np.argmax(self.probabilities))])

    @property
    def best_probability(self) -> float:
        return float(np.max(self.probabilities))


class DetectionProbability:
    """
    Maximum probability of detecting a channel action with zero false alarm

    Every method is the exact value of tr[Pi_0 rho_out] for the optimal
    filter built against the unaffected probe.
    """

    @staticmethod
    def depolarizing(n: int, p: float) -> float:
        """(n - 1) p / n, whatever the pure input state"""
        if n < 2:
            raise InvalidDimensionError(f"Depolarizing detection needs n >= 2, got {n}")
        _check_probability(p)
        return (n - 1) * p / n

    @staticmethod
    def depolarizing_entangled(lambdas: SchmidtVector, p: float) -> float:
        """
        Depolarization of one arm of sum_k sqrt(l_k)|k>|k>

        Args:
            lambdas: Schmidt coefficients
            p: Depolarizing probability

        Returns:
            (1 - sum_k l_k^2 / n) p
        """
        _check_probability(p)
        purity = float(np.sum(lambdas.coefficients ** 2))
        return (1.0 - purity / lambdas.n) * p

    @staticmethod
    def coherent(n_bar: float, R: float) -> float:
        _check_loss(R, n_bar)
        return float(-np.expm1(-_amplitude_loss(R) ** 2 * n_bar))

    @staticmethod
    def squeezed(budget: PowerBudget, theta: float, phi: float, R: float) -> float:
        """
        Displaced squeezed probe D(alpha) S(zeta)|0> with alpha = sqrt(n_bar) e^{i phi}
        and zeta = r e^{i theta}, sinh^2 r = m_bar

        Args:
            budget: Photon split between displacement and squeezing
            theta: Squeezing phase
            phi: Displacement phase
            R: Loss

        Returns:
            Detection probability; phase matched when 2 phi = theta
        """
        _check_loss(R, budget.n_total)
        r = budget.squeezing_r
        mu = np.cosh(r)
        nu = np.exp(1j * theta) * np.sinh(r)
        alpha = budget.alpha_abs * np.exp(1j * phi)

        nu2 = abs(nu) ** 2
        spread = 1.0 + nu2 * R * (2.0 - R)
        quadrature = abs(alpha) ** 2 + (2.0 - R) * (
            nu2 * abs(alpha) ** 2 + mu * np.real(np.conj(nu) * alpha ** 2)
        )
        exponent = _amplitude_loss(R) ** 2 * quadrature / spread
        return float(1.0 - np.exp(-exponent) / np.sqrt(spread))

    @staticmethod
    def squeezed_vacuum(n_mean: float, R: float) -> float:
        _check_loss(R, n_mean)
        return float(1.0 - 1.0 / np.sqrt(1.0 + n_mean * R * (2.0 - R)))

    @staticmethod
    def tmsv_optimal(n_mean: float, R: float) -> float:
        """Both output modes measured jointly against the input TMSV"""
        _check_loss(R, n_mean)
        lam2 = _lambda2(n_mean)
        return float(1.0 - ((1.0 - lam2) / (1.0 - lam2 * np.sqrt(1.0 - R))) ** 2)

    @staticmethod
    def tmsv_photodiff(n_mean: float, R: float) -> float:
        """TMSV probe, filter fires on any photon-number difference between the arms"""
        _check_loss(R, n_mean)
        lam2 = _lambda2(n_mean)
        return float(1.0 - (1.0 - lam2) / (1.0 - lam2 * (1.0 - R)))

    @staticmethod
    def bright_squeezed(n_bar: float, r: float, R: float) -> float:
        """Phase-matched squeezed probe with n_bar >> m_bar"""
        _check_loss(R, n_bar)
        return float(-np.expm1(-_amplitude_loss(R) ** 2 * np.exp(2.0 * r) * n_bar))

    @staticmethod
    def for_probe(probe: ProbeSpec, R: float) -> float:
        """Dispatch on the probe kind"""
        if probe.kind == ProbeKind.COHERENT:
            return DetectionProbability.coherent(probe.n_total, R)
        if probe.kind == ProbeKind.SQUEEZED:
            return DetectionProbability.squeezed(probe.budget, probe.theta, probe.phi, R)
        if probe.kind == ProbeKind.SQUEEZED_VACUUM:
            return DetectionProbability.squeezed_vacuum(probe.n_total, R)
        if probe.kind == ProbeKind.TMSV_OPTIMAL:
            return DetectionProbability.tmsv_optimal(probe.n_total, R)
        if probe.kind == ProbeKind.TMSV_PHOTODIFF:
            return DetectionProbability.tmsv_photodiff(probe.n_total, R)
        raise InputError(f"Unknown probe kind: {probe.kind}")


def phase_scan(budget: PowerBudget, theta: float, R: float, points: int = PHASE_SCAN_POINTS) -> PhaseScan:
    """
    Squeezed-probe detection probability on a uniform phi grid over [0, 2 pi)

    Args:
        budget: Photon split
        theta: Squeezing phase
        R: Loss
        points: Grid size

    Returns:
        PhaseScan; its maximum sits where 2 phi - theta = 0 (mod 2 pi)
    """
    if points < 1:
        raise InputError(f"points must be positive, got {points}")
    phis = np.linspace(0.0, 2.0 * np.pi, points, endpoint=False)
    probabilities = np.array([DetectionProbability.squeezed(budget, theta, phi, R) for phi in phis])
    scan = PhaseScan(phis=phis, probabilities=probabilities)
    logger.debug(f"Phase scan theta={theta:.4g}: best phi={scan.best_phi:.4g}, P={scan.best_probability:.6g}")
    return scan


p_depol = DetectionProbability.depolarizing
p_depol_entangled = DetectionProbability.depolarizing_entangled
p_loss_coherent = DetectionProbability.coherent
p_loss_squeezed = DetectionProbability.squeezed
p_loss_sv = DetectionProbability.squeezed_vacuum
p_loss_tmsv = DetectionProbability.tmsv_optimal
p_loss_tmsv_photodiff = DetectionProbability.tmsv_photodiff
p_loss_bright_squeezed = DetectionProbability.bright_squeezed
