"""
Minimum detectable loss R_M and minimum probe power <n>_min

R_M is the loss at which the detection probability reaches P_ac. Every
P(R) here is nondecreasing on [0, 1], so R_M exists exactly when
P(1) >= P_ac, i.e. when the probe carries at least <n>_min photons.
"""
from enum import Enum
from typing import Callable, Optional, Union

import numpy as np
from scipy.optimize import bisect, brentq

from .detection import DetectionProbability
from .probes import AcceptanceProbability, ProbeKind, ProbeSpec, SensingResult
from ..states.budget import PowerBudget
from ..utils.exceptions import InputError, InsufficientPowerError
from ..utils.logger import setup_logger

logger = setup_logger(__name__)

BISECT_XTOL = 1e-12
BISECT_MAXITER = 200
POWER_SEARCH_LIMIT = 1e12

PacLike = Union[AcceptanceProbability, float]


class ApproxKind(str, Enum):
    SV_LARGE_N = "sv_large_n"
    BRIGHT_SQUEEZED = "bright_squeezed"


def _log_inverse_reject(p: float) -> float:
    """ln(1 / (1 - P_ac))"""
    return float(-np.log1p(-p))


def n_min(kind: ProbeKind, p_ac: PacLike) -> float:
    """
    Minimum mean photon number that reaches P_ac at total loss R = 1

    Args:
        kind: Any probe kind except SQUEEZED (use n_min_for_ratio)
        p_ac: Acceptance probability

    Returns:
        <n>_min
    """
    p = float(AcceptanceProbability.coerce(p_ac))
    kind = ProbeKind(kind)
    if kind == ProbeKind.COHERENT:
        return _log_inverse_reject(p)
    if kind == ProbeKind.SQUEEZED_VACUUM:
        return (1.0 / (1.0 - p)) ** 2 - 1.0
    if kind == ProbeKind.TMSV_OPTIMAL:
        return 1.0 / np.sqrt(1.0 - p) - 1.0
    if kind == ProbeKind.TMSV_PHOTODIFF:
        return p / (1.0 - p)
    raise InputError("A squeezed probe's <n>_min depends on its photon split; use n_min_for_ratio")


def _squeezed_n_min(ratio: float, theta: float, phi: float, p: float) -> float:
    if not 0.0 <= ratio <= 1.0:
        raise InputError(f"Squeezing ratio must be in [0, 1], got {ratio}")

    def gap(n_total: float) -> float:
        budget = PowerBudget.from_ratio(n_total, ratio)
        return DetectionProbability.squeezed(budget, theta, phi, 1.0) - p

    hi = 1.0
    while gap(hi) < 0:
        hi *= 2.0
        if hi > POWER_SEARCH_LIMIT:
            raise InputError(f"No photon number reaches P_ac={p} at squeezing ratio {ratio}")
    return float(brentq(gap, 0.0, hi, xtol=1e-14, rtol=1e-14, maxiter=BISECT_MAXITER))


def n_min_for_ratio(ratio: float, p_ac: PacLike, theta: float = 0.0, phi: float = 0.0) -> float:
    """
    <n>_min of a squeezed probe spending a fixed fraction of photons on squeezing

    Args:
        ratio: m_bar / <n>
        p_ac: Acceptance probability
        theta: Squeezing phase
        phi: Displacement phase

    Returns:
        Closed form at the coherent / squeezed-vacuum endpoints of the
        phase-matched probe, a root of P(R=1) = P_ac otherwise
    """
    p = float(AcceptanceProbability.coerce(p_ac))
    if theta == 0.0 and phi == 0.0:
        if ratio == 0.0:
            return n_min(ProbeKind.COHERENT, p)
        if ratio == 1.0:
            return n_min(ProbeKind.SQUEEZED_VACUUM, p)
    return _squeezed_n_min(ratio, theta, phi, p)


def probe_n_min(probe: ProbeSpec, p_ac: PacLike) -> float:
    """<n>_min for the kind and, for squeezed probes, photon split of `probe`"""
    if probe.kind != ProbeKind.SQUEEZED:
        return n_min(probe.kind, p_ac)
    ratio = probe.budget.m_bar / probe.n_total if probe.n_total > 0 else 0.0
    return n_min_for_ratio(ratio, p_ac, probe.theta, probe.phi)


def bisect_loss(probability: Callable[[float], float], p: float, n_min_value: float, n_total: float) -> float:
    """
    Solve P(R) = P_ac on [0, 1] by bisection

    Args:
        probability: Nondecreasing P(R)
        p: Acceptance probability
        n_min_value: Reported in InsufficientPowerError
        n_total: Probe power, reported likewise

    Returns:
        R_M to 1e-12
    """
    top = probability(1.0) - p
    if top < 0:
        raise InsufficientPowerError(n_min_value, n_total)
    if top == 0:
        return 1.0
    return float(bisect(lambda R: probability(R) - p, 0.0, 1.0, xtol=BISECT_XTOL, maxiter=BISECT_MAXITER))


def _closed_form(kind: ProbeKind, n_total: float, p: float) -> float:
    if kind == ProbeKind.COHERENT:
        s = min(np.sqrt(_log_inverse_reject(p) / n_total), 1.0)
        return float(s * (2.0 - s))
    if kind == ProbeKind.SQUEEZED_VACUUM:
        c = (1.0 / (1.0 - p)) ** 2 - 1.0
        return float(1.0 - np.sqrt(max(1.0 - c / n_total, 0.0)))
    if kind == ProbeKind.TMSV_OPTIMAL:
        u = min((1.0 / np.sqrt(1.0 - p) - 1.0) / n_total, 1.0)
        return float(u * (2.0 - u))
    if kind == ProbeKind.TMSV_PHOTODIFF:
        return float(min(p / ((1.0 - p) * n_total), 1.0))
    raise InputError(f"No closed-form R_M for {kind.value}")


def r_min(probe: ProbeSpec, p_ac: PacLike, method: str = "auto") -> SensingResult:
    """
    Minimum detectable loss of a probe

    Args:
        probe: Probe with n_total > 0
        p_ac: Acceptance probability
        method: "auto" (closed form where one exists) or "bisection"

    Returns:
        SensingResult with R_M in (0, 1]

    Raises:
        InsufficientPowerError: probe power below <n>_min
    """
    p = float(AcceptanceProbability.coerce(p_ac))
    if probe.n_total <= 0:
        raise InputError(f"r_min needs n_total > 0, got {probe.n_total}")
    if method not in ("auto", "bisection"):
        raise InputError(f"Unknown method {method!r}")

    threshold = probe_n_min(probe, p)
    if probe.n_total < threshold:
        raise InsufficientPowerError(threshold, probe.n_total)

    def probability(R: float) -> float:
        return DetectionProbability.for_probe(probe, R)

    if method == "auto" and probe.kind != ProbeKind.SQUEEZED:
        loss = _closed_form(probe.kind, probe.n_total, p)
        used = "closed_form"
    else:
        try:
            loss = bisect_loss(probability, p, threshold, probe.n_total)
        except InsufficientPowerError:
            # n_total sits on the threshold within rounding
            loss = 1.0
        used = "bisection"

    logger.debug(f"R_M[{probe.kind.value}, n={probe.n_total:.6g}] = {loss:.12g} ({used})")
    return SensingResult(R_M=loss, n_min=threshold, P_at_R=probability(loss), method=used)


def approx_r_min(
    kind: ApproxKind,
    p_ac: PacLike,
    n_mean: Optional[float] = None,
    n_bar: Optional[float] = None,
    r: float = 0.0
) -> float:
    """
    Asymptotic R_M

    Args:
        kind: SV_LARGE_N (needs n_mean) or BRIGHT_SQUEEZED (needs n_bar, r)
        p_ac: Acceptance probability
        n_mean: Squeezed-vacuum photon number
        n_bar: Displacement photon number of a bright squeezed probe
        r: Squeezing parameter of a bright squeezed probe

    Returns:
        c / (2 <n>) for large squeezed vacua, x (2 - x) with
        x = sqrt(ln(1/(1 - P_ac))) / (e^r sqrt(n_bar)) for bright probes
    """
    p = float(AcceptanceProbability.coerce(p_ac))
    kind = ApproxKind(kind)
    if kind == ApproxKind.SV_LARGE_N:
        if n_mean is None or n_mean <= 0:
            raise InputError("sv_large_n needs n_mean > 0")
        c = (1.0 / (1.0 - p)) ** 2 - 1.0
        return c / (2.0 * n_mean)

    if n_bar is None or n_bar <= 0:
        raise InputError("bright_squeezed needs n_bar > 0")
    x = np.sqrt(_log_inverse_reject(p)) / (np.exp(r) * np.sqrt(n_bar))
    return float(x * (2.0 - x))
