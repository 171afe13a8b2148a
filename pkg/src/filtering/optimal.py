"""
Optimal unambiguous filtering

The filter announcing rho0 must never fire on rho1 (or on any of the
states it is filtered against), so Pi_0 lives in the kernel of every
rejected state. The largest such operator is the complement of the union
of their supports, which maximizes tr[Pi_0 rho0].
"""
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .povm import Povm, false_alarm
from ..linalg.spectral import Projector, support_projector, union_projector
from ..states.density import DensityOperator, PureState
from ..utils.exceptions import DimensionMismatchError, EmptyOtherSetError
from ..utils.logger import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class FilterResult:
    """Optimal filter with its detection probability and support dimensions"""

    povm: Povm
    detection_probability: float
    false_alarm: float
    n: int
    m: int

    @property
    def P(self) -> float:
        return self.detection_probability

    def to_dict(self) -> dict:
        return {
            "P": self.detection_probability,
            "false_alarm": self.false_alarm,
            "n": self.n,
            "m": self.m,
            "povm": self.povm.to_json(),
        }


def _require_same_dim(rho0: DensityOperator, others: Sequence[DensityOperator]):
    for k, rho in enumerate(others, start=1):
        if rho.dim != rho0.dim:
            raise DimensionMismatchError(f"rho{k} has dimension {rho.dim}, rho0 has {rho0.dim}")


def _filter_from_rejected(
    rho0: DensityOperator,
    rejected: Projector,
    others: Sequence[DensityOperator],
    rel_tol: Optional[float]
) -> FilterResult:
    detect = rejected.complement()
    povm = Povm(elements=(detect.matrix, rejected.matrix))

    probability = float(np.real(np.vdot(detect.matrix.conj().T, rho0.matrix)))
    probability = float(np.clip(probability, 0.0, 1.0))
    worst_alarm = max(false_alarm(povm, rho) for rho in others)

    n = union_projector([support_projector(rho0, rel_tol), rejected], rel_tol).rank
    logger.debug(f"Filter: P={probability:.12g}, false alarm={worst_alarm:.3e}, n={n}, m={rejected.rank}")

    return FilterResult(
        povm=povm,
        detection_probability=probability,
        false_alarm=worst_alarm,
        n=n,
        m=rejected.rank,
    )


def optimal_filter(
    rho0: DensityOperator,
    rho1: DensityOperator,
    rel_tol: Optional[float] = None
) -> FilterResult:
    """
    Maximum-probability filter for rho0 with zero false alarm on rho1

    Args:
        rho0: Target state
        rho1: State that must never trigger outcome 0
        rel_tol: Relative eigenvalue cutoff defining the support of rho1

    Returns:
        FilterResult with Pi_1 = supp(rho1) and Pi_0 = I - Pi_1
    """
    _require_same_dim(rho0, [rho1])
    rejected = support_projector(rho1, rel_tol)
    return _filter_from_rejected(rho0, rejected, [rho1], rel_tol)


def optimal_multifilter(
    rho0: DensityOperator,
    others: Sequence[DensityOperator],
    rel_tol: Optional[float] = None
) -> FilterResult:
    """
    Filter rho0 against several states at once

    Pi_1 projects onto the union of the supports of `others`; a single
    state reduces to optimal_filter.

    Args:
        rho0: Target state
        others: Non-empty list of states to reject
        rel_tol: Relative eigenvalue cutoff

    Returns:
        FilterResult; m is the dimension of the rejected union
    """
    others = list(others)
    if not others:
        raise EmptyOtherSetError("optimal_multifilter needs at least one state to reject")
    _require_same_dim(rho0, others)

    rejected = union_projector([support_projector(rho, rel_tol) for rho in others], rel_tol)
    return _filter_from_rejected(rho0, rejected, others, rel_tol)


def pure_state_filter(psi: PureState) -> Povm:
    """{I - |psi><psi|, |psi><psi|}, the optimal filter against a pure state"""
    projector = Projector.from_vectors(psi.amplitudes / psi.norm())
    return Povm(elements=(projector.complement().matrix, projector.matrix))
