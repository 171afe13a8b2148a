"""Loss and noise sensing: closed forms, thresholds, power split and the Fock oracle"""
from .probes import AcceptanceProbability, ProbeKind, ProbeSpec, SensingResult
from .detection import (
    DetectionProbability,
    PhaseScan,
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
from .thresholds import ApproxKind, approx_r_min, n_min, n_min_for_ratio, probe_n_min, r_min
from .power_split import PowerSplit, n_min_optimized, optimize_power_split
from .oracle import FockOracle

__all__ = [
    "AcceptanceProbability",
    "ProbeKind",
    "ProbeSpec",
    "SensingResult",
    "DetectionProbability",
    "PhaseScan",
    "p_depol",
    "p_depol_entangled",
    "p_loss_bright_squeezed",
    "p_loss_coherent",
    "p_loss_squeezed",
    "p_loss_sv",
    "p_loss_tmsv",
    "p_loss_tmsv_photodiff",
    "phase_scan",
    "ApproxKind",
    "approx_r_min",
    "n_min",
    "n_min_for_ratio",
    "probe_n_min",
    "r_min",
    "PowerSplit",
    "n_min_optimized",
    "optimize_power_split",
    "FockOracle",
]
