"""
Truncated-Fock bosonic probe states

Every constructor works out how much norm is lost to the Fock cutoff
(`truncation_deficit`). Without an explicit `n_trunc` the cutoff is the
smallest one whose deficit stays below the configured bound, capped at
`Config.MAX_FOCK_LEVELS` per mode.
"""
from typing import Optional, Union

import numpy as np
from scipy.special import gammaln
from scipy.stats import poisson

from .density import BranchEnsemble, DensityOperator, PureState
from ..utils.config import Config
from ..utils.exceptions import InputError, TruncationTooSmallError
from ..utils.logger import setup_logger

logger = setup_logger(__name__)

MAX_SQUEEZING_R = 2.0

AnyState = Union[PureState, DensityOperator, BranchEnsemble]


def _choose_cutoff(
    deficits: np.ndarray,
    n_trunc: Optional[int],
    bound: float,
    label: str
) -> int:
    """
    Pick or check the Fock cutoff

    Args:
        deficits: deficits[k] is the norm lost when keeping k + 1 levels
        n_trunc: Requested number of levels, or None for the smallest admissible
        bound: Largest allowed deficit
        label: State description for messages

    Returns:
        Number of Fock levels to keep
    """
    if n_trunc is not None:
        if n_trunc < 1:
            raise InputError(f"n_trunc must be positive, got {n_trunc}")
        deficit = float(deficits[n_trunc - 1])
        if deficit > bound:
            raise TruncationTooSmallError(
                f"{label}: {n_trunc} levels lose {deficit:.3e} of the norm (bound {bound:.1e})",
                deficit=deficit,
                n_trunc=n_trunc,
            )
        return n_trunc

    admissible = np.nonzero(deficits <= bound)[0]
    if admissible.size == 0:
        cap = deficits.size
        raise TruncationTooSmallError(
            f"{label}: {cap} levels (cap) still lose {deficits[-1]:.3e} of the norm",
            deficit=float(deficits[-1]),
            n_trunc=cap,
        )
    chosen = int(admissible[0]) + 1
    logger.debug(f"{label}: using {chosen} Fock levels (deficit {deficits[chosen - 1]:.2e})")
    return chosen


def _levels(n_trunc: Optional[int]) -> int:
    return max(Config.MAX_FOCK_LEVELS, n_trunc or 0)


def coherent_state(
    alpha: complex,
    n_trunc: Optional[int] = None,
    truncation_bound: Optional[float] = None
) -> PureState:
    """
    Coherent state |alpha> in a truncated Fock basis

    Args:
        alpha: Complex amplitude
        n_trunc: Number of Fock levels (None picks the smallest admissible)
        truncation_bound: Largest allowed norm deficit

    Returns:
        PureState with amplitudes e^{-|a|^2/2} a^n / sqrt(n!)
    """
    bound = Config.TRUNCATION_BOUND if truncation_bound is None else truncation_bound
    alpha = complex(alpha)
    mean = abs(alpha) ** 2
    levels = np.arange(1, _levels(n_trunc) + 1)

    # Norm beyond the first k levels is the Poisson tail P(N >= k)
    deficits = poisson.sf(levels - 1, mean) if mean > 0 else np.zeros(levels.size)
    n_trunc = _choose_cutoff(deficits, n_trunc, bound, f"coherent alpha={alpha:.4g}")

    n = np.arange(n_trunc)
    if mean == 0:
        amplitudes = (n == 0).astype(np.complex128)
    else:
        log_mag = n * np.log(abs(alpha)) - 0.5 * mean - 0.5 * gammaln(n + 1)
        amplitudes = np.exp(log_mag) * np.exp(1j * n * np.angle(alpha))

    return PureState.from_amplitudes(
        amplitudes, dims=(n_trunc,), truncation_deficit=float(deficits[n_trunc - 1])
    )


def squeezed_coherent_state(
    alpha: complex,
    zeta: complex,
    n_trunc: Optional[int] = None,
    truncation_bound: Optional[float] = None
) -> PureState:
    """
    Displaced squeezed state D(alpha) S(zeta)|0>

    S(zeta) = exp[(zeta* a^2 - zeta a^dag^2) / 2], so theta = arg(zeta) = 0
    with real alpha is amplitude squeezing. Displacement acts after
    squeezing. Amplitudes follow from the annihilation condition
    [mu (a - alpha) + nu (a^dag - alpha*)] |psi> = 0 with mu = cosh r and
    nu = e^{i theta} sinh r.

    Args:
        alpha: Displacement amplitude
        zeta: Squeezing parameter r e^{i theta}, r <= 2
        n_trunc: Number of Fock levels (None picks the smallest admissible)
        truncation_bound: Largest allowed norm deficit

    Returns:
        PureState
    """
    bound = Config.TRUNCATION_BOUND if truncation_bound is None else truncation_bound
    alpha = complex(alpha)
    r, theta = abs(complex(zeta)), float(np.angle(zeta))
    if r > MAX_SQUEEZING_R:
        raise InputError(f"Squeezing r={r:.4g} outside supported range r <= {MAX_SQUEEZING_R}")

    mu = np.cosh(r)
    nu = np.exp(1j * theta) * np.sinh(r)
    gamma = mu * alpha + nu * alpha.conjugate()

    total = _levels(n_trunc)
    c = np.zeros(total, dtype=np.complex128)
    c[0] = np.exp(
        -0.5 * abs(alpha) ** 2 - 0.5 * alpha.conjugate() ** 2 * np.exp(1j * theta) * np.tanh(r)
    ) / np.sqrt(mu)
    if total > 1:
        c[1] = gamma * c[0] / mu
    for n in range(1, total - 1):
        c[n + 1] = (gamma * c[n] - nu * np.sqrt(n) * c[n - 1]) / (mu * np.sqrt(n + 1))

    deficits = np.clip(1.0 - np.cumsum(np.abs(c) ** 2), 0.0, None)
    n_trunc = _choose_cutoff(
        deficits, n_trunc, bound, f"squeezed alpha={alpha:.4g} zeta={complex(zeta):.4g}"
    )

    return PureState.from_amplitudes(
        c[:n_trunc], dims=(n_trunc,), truncation_deficit=float(deficits[n_trunc - 1])
    )


def tmsv_state(
    n_mean: float,
    n_trunc: Optional[int] = None,
    truncation_bound: Optional[float] = None
) -> PureState:
    """
    Two-mode squeezed vacuum sqrt(1 - l^2) sum_n l^n |n>|n>

    Args:
        n_mean: Mean photon number per arm, l^2 = n_mean / (1 + n_mean)
        n_trunc: Fock levels per mode (None picks the smallest admissible)
        truncation_bound: Largest allowed norm deficit

    Returns:
        PureState on n_trunc^2 dimensions with dims (n_trunc, n_trunc)
    """
    if n_mean < 0:
        raise InputError(f"n_mean must be non-negative, got {n_mean}")
    bound = Config.TRUNCATION_BOUND if truncation_bound is None else truncation_bound
    lam2 = n_mean / (1.0 + n_mean)
    levels = np.arange(1, _levels(n_trunc) + 1)

    deficits = lam2 ** levels
    n_trunc = _choose_cutoff(deficits, n_trunc, bound, f"tmsv n_mean={n_mean:.4g}")

    coefficients = np.sqrt(1.0 - lam2) * np.sqrt(lam2) ** np.arange(n_trunc)
    amplitudes = np.diag(coefficients).astype(np.complex128).reshape(-1)

    return PureState.from_amplitudes(
        amplitudes, dims=(n_trunc, n_trunc), truncation_deficit=float(deficits[n_trunc - 1])
    )


def mean_photon_number(state: AnyState, mode: int = 0) -> float:
    """
    tr[rho n_mode] for a Fock-basis state

    Args:
        state: PureState, DensityOperator or BranchEnsemble
        mode: Index of the mode in state.dims

    Returns:
        Mean photon number of that mode
    """
    if isinstance(state, PureState):
        populations = np.abs(state.amplitudes) ** 2
    elif isinstance(state, BranchEnsemble):
        populations = state.diagonal()
    else:
        populations = np.real(np.diag(state.matrix))

    dims = state.dims or (state.dim,)
    if not 0 <= mode < len(dims):
        raise InputError(f"Mode {mode} out of range for dims {dims}")

    populations = populations.reshape(dims)
    other_axes = tuple(axis for axis in range(len(dims)) if axis != mode)
    marginal = populations.sum(axis=other_axes) if other_axes else populations
    return float(np.dot(np.arange(dims[mode]), marginal))
