"""
Bosonic linear loss in Kraus form

The loss map exp[g(K_- - K_0)] with transmittance T = e^{-g} is the
beam-splitter channel with Kraus operators

    A_k = sum_n sqrt(C(n, k) T^{n-k} R^k) |n - k><n|,   R = 1 - T,

i.e. A_k removes k photons with binomial weight. Loss never raises the
photon number, so a Fock cutoff is an invariant subspace and the
truncated set is exactly trace preserving on it.
"""
from dataclasses import dataclass

import numpy as np
from scipy.stats import binom

from .kraus import KrausSet
from ..utils.cache import kraus_cache
from ..utils.exceptions import InputError
from ..utils.logger import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class LossChannel:
    """Linear loss R = 1 - T"""

    R: float

    def __post_init__(self):
        if not 0.0 <= self.R <= 1.0:
            raise InputError(f"Loss R must be in [0, 1], got {self.R}")

    @classmethod
    def from_transmittance(cls, T: float) -> "LossChannel":
        return cls(R=1.0 - T)

    @classmethod
    def from_rate(cls, g: float) -> "LossChannel":
        if g < 0:
            raise InputError(f"Loss rate g must be non-negative, got {g}")
        return cls(R=-np.expm1(-g))

    @property
    def T(self) -> float:
        return 1.0 - self.R

    @property
    def g(self) -> float:
        return float(-np.log(self.T)) if self.T > 0 else float("inf")


def _build_loss_kraus(R: float, n_trunc: int) -> KrausSet:
    n = np.arange(n_trunc)
    operators = []
    for k in range(n_trunc):
        weights = np.sqrt(binom.pmf(k, n[k:], R))
        if not np.any(weights > 0):
            continue
        op = np.zeros((n_trunc, n_trunc), dtype=np.complex128)
        op[n[k:] - k, n[k:]] = weights
        operators.append(op)
    kraus = KrausSet(operators=np.stack(operators))
    logger.debug(f"Loss Kraus set R={R:.6g}, n_trunc={n_trunc}: {len(kraus)} operators")
    return kraus


def loss_kraus(channel: LossChannel, n_trunc: int) -> KrausSet:
    """
    Kraus operators of linear loss on n_trunc Fock levels

    Operators that vanish identically (k > 0 at T = 1) are dropped.

    Args:
        channel: Loss channel
        n_trunc: Number of Fock levels

    Returns:
        KrausSet (cached per (R, n_trunc))
    """
    if n_trunc < 1:
        raise InputError(f"n_trunc must be positive, got {n_trunc}")
    key = ("loss", float(channel.R), int(n_trunc))
    return kraus_cache.get_or_create(key, lambda: _build_loss_kraus(float(channel.R), int(n_trunc)))


def coherent_dyad_factor(alpha: complex, beta: complex, T: float) -> complex:
    """
    E(alpha, beta) in L|alpha><beta| = E |alpha sqrt(T)><beta sqrt(T)|

    Args:
        alpha: Ket amplitude
        beta: Bra amplitude
        T: Transmittance

    Returns:
        exp[-(1 - T)(|alpha|^2 + |beta|^2 - 2 alpha beta*) / 2]
    """
    alpha, beta = complex(alpha), complex(beta)
    exponent = abs(alpha) ** 2 + abs(beta) ** 2 - 2.0 * alpha * beta.conjugate()
    return complex(np.exp(-0.5 * (1.0 - T) * exponent))
