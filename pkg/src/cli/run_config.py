"""Per-run configuration: settings defaults <- JSON config file <- flags"""
import json
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from ..utils.config import Config
from ..utils.exceptions import ParseError


# Long flag names whose destination differs from the field name
FLAG_ALIASES = {"pac": "p_ac", "nmin": "n_min", "nmax": "n_max"}


class Command(str, Enum):
    FIG1 = "fig1"
    FIG2 = "fig2"
    FIG3 = "fig3"
    CROSSCHECK = "crosscheck"
    FILTER = "filter"
    THRESHOLDS = "thresholds"


class RunConfig(BaseModel):
    """Validated options of one CLI invocation"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    command: Command
    p_ac: float = Field(default_factory=lambda: Config.P_AC, gt=0.0, lt=1.0)
    n_min: float = Field(default_factory=lambda: Config.GRID_MIN, gt=0.0)
    n_max: float = Field(default_factory=lambda: Config.GRID_MAX, gt=0.0)
    points: int = Field(default_factory=lambda: Config.GRID_POINTS, ge=1)
    trunc_bound: float = Field(default_factory=lambda: Config.TRUNCATION_BOUND, gt=0.0, lt=1.0)
    rel_tol: float = Field(default_factory=lambda: Config.REL_TOL, gt=0.0, lt=1.0)
    seed: int = Field(default_factory=lambda: Config.SEED, ge=0)
    workers: int = Field(default_factory=lambda: Config.WORKERS, ge=1)
    tolerance: float = Field(default_factory=lambda: Config.CROSSCHECK_TOLERANCE, gt=0.0)
    out: Optional[str] = None
    states: List[str] = Field(default_factory=list)
    simulate: Optional[int] = Field(default=None, ge=1)

    @model_validator(mode="after")
    def check_grid(self) -> "RunConfig":
        """The photon-number grid must not be empty"""
        if self.n_min > self.n_max:
            raise ValueError(f"n_min ({self.n_min}) must not exceed n_max ({self.n_max})")
        if self.command == Command.FILTER and len(self.states) < 2:
            raise ValueError("filter needs a target state file and at least one state to reject")
        return self

    @staticmethod
    def load_file(path: str) -> Dict[str, Any]:
        """
        Read a JSON config file whose keys mirror the long flag names

        Args:
            path: JSON file

        Returns:
            Options keyed by RunConfig field names
        """
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except OSError as e:
            raise ParseError(f"Cannot read config file {path}: {e}") from e
        except json.JSONDecodeError as e:
            raise ParseError(f"Config file {path} is not valid JSON: {e}") from e
        if not isinstance(data, dict):
            raise ParseError(f"Config file {path} must hold a JSON object")
        options = {key.replace("-", "_"): value for key, value in data.items()}
        return {FLAG_ALIASES.get(key, key): value for key, value in options.items()}

    @classmethod
    def from_sources(cls, command: str, flags: Dict[str, Any], config_file: Optional[str] = None) -> "RunConfig":
        """
        Merge the config file and explicitly given flags

        Args:
            command: Subcommand name
            flags: Parsed flags; None values count as "not given"
            config_file: Optional JSON config path

        Returns:
            RunConfig
        """
        options: Dict[str, Any] = cls.load_file(config_file) if config_file else {}
        options.update({key: value for key, value in flags.items() if value is not None})
        options["command"] = command
        try:
            return cls.model_validate(options)
        except ValidationError as e:
            raise ParseError(f"Invalid run configuration: {e}") from e
