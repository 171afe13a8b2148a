"""Probe states: qudits and truncated-Fock bosonic modes"""
from .density import BranchEnsemble, DensityOperator, PureState, fix_global_phase
from .budget import PowerBudget
from .fock import (
    coherent_state,
    mean_photon_number,
    squeezed_coherent_state,
    tmsv_state,
)
from .qudit import SchmidtVector, schmidt_entangled_qudit, schmidt_spectrum

__all__ = [
    "BranchEnsemble",
    "DensityOperator",
    "PureState",
    "fix_global_phase",
    "PowerBudget",
    "coherent_state",
    "mean_photon_number",
    "squeezed_coherent_state",
    "tmsv_state",
    "SchmidtVector",
    "schmidt_entangled_qudit",
    "schmidt_spectrum",
]
