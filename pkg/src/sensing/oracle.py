"""
Numeric detection probabilities from truncated Fock states

Builds the probe, pushes it through the Kraus form of the channel and
evaluates the optimal filter. Single-mode probes and small two-mode probes
go through dense density matrices and optimal_filter; larger two-mode
probes stay in branch form with an implicit filter.
"""
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .probes import ProbeKind, ProbeSpec
from ..channels.depolarizing import DepolarizingChannel, depolarize, depolarizing_kraus
from ..channels.kraus import apply_channel, apply_on_subsystem, subsystem_branches
from ..channels.loss import LossChannel, loss_kraus
from ..filtering.optimal import optimal_filter
from ..filtering.projective import PhotonDifferenceFilter, RankOneFilter
from ..states.budget import PowerBudget
from ..states.density import PureState
from ..states.fock import coherent_state, squeezed_coherent_state, tmsv_state
from ..states.qudit import SchmidtVector, schmidt_entangled_qudit
from ..utils.config import Config
from ..utils.logger import setup_logger

logger = setup_logger(__name__)


@dataclass
class FockOracle:
    """Numeric counterpart of every closed-form detection probability"""

    truncation_bound: Optional[float] = None
    rel_tol: Optional[float] = None
    dense_dim_limit: Optional[int] = None

    def __post_init__(self):
        if self.truncation_bound is None:
            self.truncation_bound = Config.TRUNCATION_BOUND
        if self.rel_tol is None:
            self.rel_tol = Config.REL_TOL
        if self.dense_dim_limit is None:
            self.dense_dim_limit = Config.DENSE_DIM_LIMIT

    # Qudits

    def depolarizing(self, probe: PureState, p: float) -> float:
        """Optimal filter for L_D(|psi><psi|) against |psi><psi|"""
        rho1 = probe.to_density()
        rho0 = depolarize(rho1, DepolarizingChannel(dim=probe.dim, p=p))
        return optimal_filter(rho0, rho1, self.rel_tol).detection_probability

    def depolarizing_entangled(self, lambdas: SchmidtVector, p: float) -> float:
        """Depolarization of the first arm of a Schmidt-form probe"""
        n = lambdas.n
        probe = schmidt_entangled_qudit(lambdas, n)
        rho1 = probe.to_density()
        kraus = depolarizing_kraus(DepolarizingChannel(dim=n, p=p))
        rho0 = apply_on_subsystem(kraus, rho1, subsystem=0, dims=(n, n))
        return optimal_filter(rho0, rho1, self.rel_tol).detection_probability

    # Single-mode loss

    def _single_mode(self, probe: PureState, R: float) -> float:
        kraus = loss_kraus(LossChannel(R=R), probe.dim)
        rho0 = apply_channel(kraus, probe)
        return optimal_filter(rho0, probe.to_density(), self.rel_tol).detection_probability

    def coherent(self, n_bar: float, R: float, phi: float = 0.0) -> float:
        probe = coherent_state(np.sqrt(n_bar) * np.exp(1j * phi), truncation_bound=self.truncation_bound)
        return self._single_mode(probe, R)

    def squeezed(self, budget: PowerBudget, theta: float, phi: float, R: float) -> float:
        probe = squeezed_coherent_state(
            budget.alpha_abs * np.exp(1j * phi),
            budget.squeezing_r * np.exp(1j * theta),
            truncation_bound=self.truncation_bound,
        )
        return self._single_mode(probe, R)

    def squeezed_vacuum(self, n_mean: float, R: float) -> float:
        return self.squeezed(PowerBudget(n_total=n_mean, m_bar=n_mean, n_bar=0.0), 0.0, 0.0, R)

    # Two-mode loss on the signal arm

    def _lossy_tmsv(self, n_mean: float, R: float):
        probe = tmsv_state(n_mean, truncation_bound=self.truncation_bound)
        n_levels = probe.dims[0]
        kraus = loss_kraus(LossChannel(R=R), n_levels)
        output = subsystem_branches(kraus, probe, subsystem=0)
        if probe.dim <= self.dense_dim_limit:
            return probe, output.to_density()
        logger.debug(f"TMSV n={n_mean:.4g}: {probe.dim} dims, using branch form")
        return probe, output

    def tmsv_optimal(self, n_mean: float, R: float) -> float:
        probe, output = self._lossy_tmsv(n_mean, R)
        if probe.dim <= self.dense_dim_limit:
            return optimal_filter(output, probe.to_density(), self.rel_tol).detection_probability
        return RankOneFilter.from_state(probe).detection_probability(output)

    def tmsv_photodiff(self, n_mean: float, R: float) -> float:
        probe, output = self._lossy_tmsv(n_mean, R)
        photodiff = PhotonDifferenceFilter(n_levels=probe.dims[0])
        if probe.dim <= self.dense_dim_limit:
            return float(photodiff.povm().probabilities(output)[0])
        return photodiff.detection_probability(output)

    def for_probe(self, probe: ProbeSpec, R: float) -> float:
        """Numeric detection probability of any probe kind"""
        if probe.kind == ProbeKind.COHERENT:
            return self.coherent(probe.n_total, R)
        if probe.kind == ProbeKind.SQUEEZED:
            return self.squeezed(probe.budget, probe.theta, probe.phi, R)
        if probe.kind == ProbeKind.SQUEEZED_VACUUM:
            return self.squeezed_vacuum(probe.n_total, R)
        if probe.kind == ProbeKind.TMSV_OPTIMAL:
            return self.tmsv_optimal(probe.n_total, R)
        return self.tmsv_photodiff(probe.n_total, R)

    def loss_curve(self, probe: ProbeSpec, losses: Sequence[float]) -> np.ndarray:
        return np.array([self.for_probe(probe, R) for R in losses])
