"""Unambiguous filtering: optimal POVMs, implicit filters and outcome sampling"""
from .povm import Povm, PovmDiagnostics, false_alarm, validate_povm
from .optimal import FilterResult, optimal_filter, optimal_multifilter, pure_state_filter
from .projective import PhotonDifferenceFilter, RankOneFilter
from .simulation import SimulationResult, outcome_probabilities, simulate_outcomes

__all__ = [
    "Povm",
    "PovmDiagnostics",
    "false_alarm",
    "validate_povm",
    "FilterResult",
    "optimal_filter",
    "optimal_multifilter",
    "pure_state_filter",
    "PhotonDifferenceFilter",
    "RankOneFilter",
    "SimulationResult",
    "outcome_probabilities",
    "simulate_outcomes",
]
