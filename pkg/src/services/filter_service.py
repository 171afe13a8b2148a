"""Filter Service - optimal filters for states read from JSON matrix files"""
import json
from pathlib import Path
from typing import List, Optional, Sequence

from ..filtering.optimal import optimal_filter, optimal_multifilter
from ..filtering.simulation import simulate_outcomes
from ..states.density import DensityOperator
from ..utils.exceptions import InputError, ParseError
from ..utils.logger import setup_logger

logger = setup_logger(__name__)


class FilterService:
    """Loads states, builds the optimal filter and optionally samples outcomes"""

    @staticmethod
    def load_state(path: str) -> DensityOperator:
        """
        Read a density operator in the {dim_rows, dim_cols, re, im} format

        Args:
            path: JSON file

        Returns:
            Validated DensityOperator
        """
        try:
            payload = json.loads(Path(path).read_text(encoding="utf-8"))
        except OSError as e:
            raise ParseError(f"Cannot read state file {path}: {e}") from e
        except json.JSONDecodeError as e:
            raise ParseError(f"{path} is not valid JSON: {e}") from e

        if not isinstance(payload, dict):
            raise ParseError(f"{path}: expected a JSON object")
        state = DensityOperator.from_json(payload)
        logger.debug(f"Loaded {path}: dimension {state.dim}")
        return state

    @staticmethod
    def run(
        target: str,
        others: Sequence[str],
        rel_tol: Optional[float] = None,
        simulate: Optional[int] = None,
        seed: int = 0
    ) -> dict:
        """
        Filter the target state against one or more others

        Args:
            target: JSON file of rho0
            others: JSON files of the states to reject
            rel_tol: Support cutoff
            simulate: Monte Carlo trials per state (None = no sampling)
            seed: Seed of the first state's run; state k uses seed + k

        Returns:
            FilterResult record, with a "simulation" entry when sampling
        """
        if not others:
            raise InputError("filter needs a target state and at least one state to reject")

        rho0 = FilterService.load_state(target)
        rejected: List[DensityOperator] = [FilterService.load_state(path) for path in others]

        if len(rejected) == 1:
            result = optimal_filter(rho0, rejected[0], rel_tol)
        else:
            result = optimal_multifilter(rho0, rejected, rel_tol)
        logger.info(f"Filter: P={result.detection_probability:.12g}, n={result.n}, m={result.m}")

        payload = result.to_dict()
        if simulate is not None:
            states = [rho0] + rejected
            payload["simulation"] = {
                f"rho{k}": simulate_outcomes(result.povm, state, simulate, seed + k).to_dict()
                for k, state in enumerate(states)
            }
        return payload
