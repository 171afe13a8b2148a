"""
Crosscheck Service - closed forms against the numeric pipeline

Every detection-probability formula is compared with states -> channels ->
filtering on a fixed grid. The run fails when any deviation exceeds the
tolerance.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
import pandas as pd

from ..sensing.detection import DetectionProbability
from ..sensing.oracle import FockOracle
from ..states.budget import PowerBudget
from ..states.density import PureState
from ..states.qudit import SchmidtVector
from ..utils.config import Config
from ..utils.logger import setup_logger

logger = setup_logger(__name__)

# (formula, label, analytic, numeric)
Check = Tuple[str, str, Callable[[], float], Callable[[], float]]


@dataclass(frozen=True)
class CrosscheckReport:
    """Per-point comparisons and the worst deviation of each formula"""

    points: pd.DataFrame
    tolerance: float

    @property
    def deviations(self) -> Dict[str, float]:
        grouped = self.points.groupby("formula", sort=False)["deviation"].max()
        return {formula: float(value) for formula, value in grouped.items()}

    @property
    def passed(self) -> bool:
        return all(value <= self.tolerance for value in self.deviations.values())

    def summary(self) -> pd.DataFrame:
        counts = self.points.groupby("formula", sort=False).size()
        rows = [
            {
                "formula": formula,
                "points": int(counts[formula]),
                "max_deviation": deviation,
                "tolerance": self.tolerance,
                "passed": deviation <= self.tolerance,
            }
            for formula, deviation in self.deviations.items()
        ]
        return pd.DataFrame(rows, columns=["formula", "points", "max_deviation", "tolerance", "passed"])


class CrosscheckService:
    """Runs the analytic-vs-numeric grid"""

    LOSS_GRID = tuple(round(0.05 + 0.1 * k, 2) for k in range(10))
    PHOTON_GRID = (0.25, 1.0, 4.0)
    SQUEEZING_RATIO = 0.25
    GENERAL_PHASES = (np.pi / 3, 0.4)
    DEPOLARIZING_DIMS = (2, 3, 4, 5)
    ENTANGLED_DIMS = (2, 3, 4)
    DEPOLARIZING_P = tuple(round(0.1 * k, 1) for k in range(11))
    RANDOM_STATES = 5

    def __init__(
        self,
        truncation_bound: Optional[float] = None,
        rel_tol: Optional[float] = None,
        tolerance: Optional[float] = None,
        seed: Optional[int] = None,
        workers: int = 1
    ):
        """
        Initialize crosscheck service

        Args:
            truncation_bound: Fock truncation bound of the oracle
            rel_tol: Support cutoff of the numeric filters
            tolerance: Largest accepted deviation
            seed: Seed for random qudit states and Schmidt vectors
            workers: Thread pool size
        """
        self.oracle = FockOracle(truncation_bound=truncation_bound, rel_tol=rel_tol)
        self.tolerance = Config.CROSSCHECK_TOLERANCE if tolerance is None else tolerance
        self.seed = Config.SEED if seed is None else seed
        self.workers = max(int(workers), 1)

    def _depolarizing_checks(self, rng: np.random.Generator) -> List[Check]:
        checks = []
        for n in self.DEPOLARIZING_DIMS:
            for k in range(self.RANDOM_STATES):
                raw = rng.normal(size=n) + 1j * rng.normal(size=n)
                probe = PureState.from_amplitudes(raw)
                for p in self.DEPOLARIZING_P:
                    checks.append((
                        "depolarizing",
                        f"n={n} state={k} p={p}",
                        lambda n=n, p=p: DetectionProbability.depolarizing(n, p),
                        lambda probe=probe, p=p: self.oracle.depolarizing(probe, p),
                    ))

        for n in self.ENTANGLED_DIMS:
            vectors = [SchmidtVector.uniform(n)] + [
                SchmidtVector.normalized(rng.dirichlet(np.ones(n))) for _ in range(self.RANDOM_STATES)
            ]
            for k, lambdas in enumerate(vectors):
                for p in self.DEPOLARIZING_P:
                    checks.append((
                        "depolarizing_entangled",
                        f"n={n} schmidt={k} p={p}",
                        lambda lambdas=lambdas, p=p: DetectionProbability.depolarizing_entangled(lambdas, p),
                        lambda lambdas=lambdas, p=p: self.oracle.depolarizing_entangled(lambdas, p),
                    ))
        return checks

    def _loss_checks(self) -> List[Check]:
        theta, phi = self.GENERAL_PHASES
        checks = []
        for n in self.PHOTON_GRID:
            budget = PowerBudget.from_ratio(n, self.SQUEEZING_RATIO)
            for R in self.LOSS_GRID:
                label = f"n={n} R={R}"
                checks.extend([
                    ("coherent", label,
                     lambda n=n, R=R: DetectionProbability.coherent(n, R),
                     lambda n=n, R=R: self.oracle.coherent(n, R)),
                    ("squeezed", label,
                     lambda b=budget, R=R: DetectionProbability.squeezed(b, 0.0, 0.0, R),
                     lambda b=budget, R=R: self.oracle.squeezed(b, 0.0, 0.0, R)),
                    ("squeezed_general_phase", label,
                     lambda b=budget, R=R: DetectionProbability.squeezed(b, theta, phi, R),
                     lambda b=budget, R=R: self.oracle.squeezed(b, theta, phi, R)),
                    ("squeezed_vacuum", label,
                     lambda n=n, R=R: DetectionProbability.squeezed_vacuum(n, R),
                     lambda n=n, R=R: self.oracle.squeezed_vacuum(n, R)),
                    ("tmsv_optimal", label,
                     lambda n=n, R=R: DetectionProbability.tmsv_optimal(n, R),
                     lambda n=n, R=R: self.oracle.tmsv_optimal(n, R)),
                    ("tmsv_photodiff", label,
                     lambda n=n, R=R: DetectionProbability.tmsv_photodiff(n, R),
                     lambda n=n, R=R: self.oracle.tmsv_photodiff(n, R)),
                ])
        return checks

    @staticmethod
    def _evaluate(check: Check) -> dict:
        formula, label, analytic, numeric = check
        exact, approx = analytic(), numeric()
        return {
            "formula": formula,
            "point": label,
            "analytic": exact,
            "numeric": approx,
            "deviation": abs(exact - approx),
        }

    def run(self) -> CrosscheckReport:
        """
        Evaluate every check

        Returns:
            CrosscheckReport (rows in a fixed order for any worker count)
        """
        rng = np.random.default_rng(self.seed)
        checks = self._depolarizing_checks(rng) + self._loss_checks()
        logger.info(f"Crosscheck: {len(checks)} points, tolerance {self.tolerance:g}")

        if self.workers == 1:
            rows = [self._evaluate(check) for check in checks]
        else:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                rows = list(pool.map(self._evaluate, checks))

        report = CrosscheckReport(points=pd.DataFrame(rows), tolerance=self.tolerance)
        for formula, deviation in report.deviations.items():
            logger.info(f"  {formula}: max deviation {deviation:.3e}")
        return report
