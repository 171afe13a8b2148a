"""Configuration management with Pydantic validation"""
from pydantic import Field, field_validator, model_validator, ConfigDict
from pydantic_settings import BaseSettings
try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self


class Settings(BaseSettings):
    """Numerical and run-time settings with automatic validation"""

    model_config = ConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore"
    )

    # Linear algebra
    REL_TOL: float = Field(
        default=1e-10, gt=0.0, lt=1.0,
        description="Rank cutoff relative to the largest eigenvalue"
    )

    # Fock truncation
    TRUNCATION_BOUND: float = Field(
        default=1e-12, gt=0.0, lt=1.0,
        description="Largest allowed norm lost to Fock truncation"
    )
    MAX_FOCK_LEVELS: int = Field(default=200, ge=2, le=2000, description="Per-mode Fock cap")
    DENSE_DIM_LIMIT: int = Field(
        default=1600, ge=4,
        description="Largest two-mode dimension handled with dense density matrices"
    )

    # Sensing
    P_AC: float = Field(default=0.5, gt=0.0, lt=1.0, description="Acceptance probability")

    # Sweeps
    GRID_MIN: float = Field(default=0.1, gt=0.0, description="Smallest mean photon number")
    GRID_MAX: float = Field(default=1000.0, gt=0.0, description="Largest mean photon number")
    GRID_POINTS: int = Field(default=60, ge=1, le=100000, description="Log-grid points")
    WORKERS: int = Field(default=1, ge=1, le=64, description="Thread pool size for sweeps")

    # Cross-check and simulation
    CROSSCHECK_TOLERANCE: float = Field(
        default=1e-6, gt=0.0,
        description="Largest accepted analytic-vs-numeric deviation"
    )
    SEED: int = Field(default=0, ge=0, description="Default Monte Carlo seed")

    # Logging
    LOG_LEVEL: str = Field(default="INFO", description="Logging level")

    @model_validator(mode='after')
    def check_grid_bounds(self) -> Self:
        """Make sure the default photon-number grid is not empty"""
        if self.GRID_MIN > self.GRID_MAX:
            raise ValueError(
                f"GRID_MIN ({self.GRID_MIN}) must not exceed GRID_MAX ({self.GRID_MAX})"
            )
        return self

    @field_validator("LOG_LEVEL")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate log level is valid"""
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        v_upper = v.upper()
        if v_upper not in valid_levels:
            raise ValueError(f"Invalid log level: {v}. Must be one of {valid_levels}")
        return v_upper

    @field_validator("TRUNCATION_BOUND")
    @classmethod
    def validate_truncation_bound(cls, v: float) -> float:
        """Reject bounds too loose for a meaningful Fock oracle"""
        if v > 0.1:
            raise ValueError("TRUNCATION_BOUND > 0.1 discards too much of the state. Recommended: 1e-12")
        return v


# Create singleton instance with validation
try:
    config = Settings()
except Exception as e:
    print(f"Configuration validation error: {e}")
    print("Please check your .env file and environment variables.")
    raise

# Code reads settings as Config.FIELD
Config = config
