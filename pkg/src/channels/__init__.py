"""CP maps: depolarization and bosonic linear loss"""
from .kraus import (
    KrausSet,
    apply_channel,
    apply_on_subsystem,
    channel_branches,
    subsystem_branches,
)
from .depolarizing import DepolarizingChannel, depolarize, depolarizing_kraus
from .loss import LossChannel, coherent_dyad_factor, loss_kraus

__all__ = [
    "KrausSet",
    "apply_channel",
    "apply_on_subsystem",
    "channel_branches",
    "subsystem_branches",
    "DepolarizingChannel",
    "depolarize",
    "depolarizing_kraus",
    "LossChannel",
    "coherent_dyad_factor",
    "loss_kraus",
]
