"""
Figure Service - sensitivity curves as tables

Each figure is a sweep over a logarithmic <n> grid. Points are independent;
with workers > 1 they run on a thread pool and are collected in grid order.
"""
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Sequence, Union

import numpy as np
import pandas as pd

from ..reports.csv_report import INSUFFICIENT
from ..sensing.power_split import n_min_optimized, optimize_power_split
from ..sensing.probes import AcceptanceProbability, ProbeKind, ProbeSpec
from ..sensing.thresholds import n_min, r_min
from ..utils.exceptions import InputError, InsufficientPowerError
from ..utils.logger import setup_logger

logger = setup_logger(__name__)

Cell = Union[float, str]


def log_grid(n_lo: float, n_hi: float, points: int) -> np.ndarray:
    """
    Logarithmically spaced photon numbers

    Args:
        n_lo: First point (> 0)
        n_hi: Last point (>= n_lo)
        points: Number of points

    Returns:
        Grid including both ends
    """
    if n_lo <= 0 or n_hi < n_lo or points < 1:
        raise InputError(f"Invalid grid: [{n_lo}, {n_hi}] with {points} points")
    if points == 1:
        return np.array([float(n_lo)])
    return np.logspace(np.log10(n_lo), np.log10(n_hi), points)


class FigureService:
    """Builds the R_M sweep tables"""

    FIG1_RATIOS = (0.0, 0.2, 0.9, 1.0)
    FIG3_COLUMNS = ("coherent", "sq_opt", "sv", "tmsv_opt", "tmsv_photodiff")

    def __init__(self, p_ac: float, grid: Sequence[float], workers: int = 1):
        """
        Initialize figure service

        Args:
            p_ac: Acceptance probability
            grid: Photon numbers to evaluate
            workers: Thread pool size (1 = serial)
        """
        self.p_ac = AcceptanceProbability.coerce(p_ac)
        self.grid = [float(n) for n in grid]
        self.workers = max(int(workers), 1)
        if not self.grid:
            raise InputError("Photon-number grid is empty")

    def _map(self, fn: Callable, items: Iterable) -> List:
        items = list(items)
        if self.workers == 1:
            return [fn(item) for item in items]
        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            return list(pool.map(fn, items))

    def _loss_or_sentinel(self, probe: ProbeSpec) -> Cell:
        try:
            return r_min(probe, self.p_ac).R_M
        except InsufficientPowerError:
            return INSUFFICIENT

    def fig1(self) -> pd.DataFrame:
        """R_M of phase-matched squeezed probes at fixed m_bar / <n>"""
        points = [(ratio, n) for ratio in self.FIG1_RATIOS for n in self.grid]

        def evaluate(point):
            ratio, n = point
            return {"n_total": n, "ratio": ratio, "R_M": self._loss_or_sentinel(ProbeSpec.for_ratio(n, ratio))}

        logger.info(f"fig1: {len(points)} points")
        return pd.DataFrame(self._map(evaluate, points), columns=["n_total", "ratio", "R_M"])

    def fig2(self) -> pd.DataFrame:
        """Optimal photon split and its gain over the squeezed vacuum"""

        def evaluate(n: float) -> dict:
            row = {"n_total": n, "m_bar_opt_ratio": INSUFFICIENT, "R_M_opt": INSUFFICIENT, "R_M_opt_over_R_M_sv": INSUFFICIENT}
            try:
                split = optimize_power_split(n, self.p_ac)
            except InsufficientPowerError:
                return row
            row["m_bar_opt_ratio"] = split.ratio
            row["R_M_opt"] = split.R_M_opt
            sv = self._loss_or_sentinel(ProbeSpec.squeezed_vacuum(n))
            if sv != INSUFFICIENT:
                row["R_M_opt_over_R_M_sv"] = split.R_M_opt / sv
            return row

        logger.info(f"fig2: {len(self.grid)} points")
        return pd.DataFrame(
            self._map(evaluate, self.grid),
            columns=["n_total", "m_bar_opt_ratio", "R_M_opt", "R_M_opt_over_R_M_sv"],
        )

    def fig3(self) -> pd.DataFrame:
        """R_M of every probe strategy side by side"""

        def evaluate(n: float) -> dict:
            try:
                squeezed = optimize_power_split(n, self.p_ac).R_M_opt
            except InsufficientPowerError:
                squeezed = INSUFFICIENT
            return {
                "n_total": n,
                "coherent": self._loss_or_sentinel(ProbeSpec.coherent(n)),
                "sq_opt": squeezed,
                "sv": self._loss_or_sentinel(ProbeSpec.squeezed_vacuum(n)),
                "tmsv_opt": self._loss_or_sentinel(ProbeSpec.tmsv_optimal(n)),
                "tmsv_photodiff": self._loss_or_sentinel(ProbeSpec.tmsv_photodiff(n)),
            }

        logger.info(f"fig3: {len(self.grid)} points")
        return pd.DataFrame(self._map(evaluate, self.grid), columns=["n_total", *self.FIG3_COLUMNS])

    def thresholds(self) -> pd.DataFrame:
        """<n>_min of every probe at the acceptance probability"""
        rows = [
            {"probe": ProbeKind.COHERENT.value, "n_min": n_min(ProbeKind.COHERENT, self.p_ac)},
            {"probe": "squeezed_optimized", "n_min": n_min_optimized(self.p_ac)},
            {"probe": ProbeKind.SQUEEZED_VACUUM.value, "n_min": n_min(ProbeKind.SQUEEZED_VACUUM, self.p_ac)},
            {"probe": ProbeKind.TMSV_OPTIMAL.value, "n_min": n_min(ProbeKind.TMSV_OPTIMAL, self.p_ac)},
            {"probe": ProbeKind.TMSV_PHOTODIFF.value, "n_min": n_min(ProbeKind.TMSV_PHOTODIFF, self.p_ac)},
        ]
        return pd.DataFrame(rows, columns=["probe", "n_min"])
