"""Exception hierarchy shared by the library and the CLI"""
from typing import Dict, Optional

EXIT_OK = 0
EXIT_TOLERANCE = 2
EXIT_INPUT = 3


class FilteringError(Exception):
    """Base class for every error raised by this package"""

    exit_code = EXIT_INPUT


class InputError(FilteringError, ValueError):
    """Invalid matrices, states, dimensions or files"""


class NotHermitianError(InputError):
    """Matrix violates the Hermitian symmetry tolerance"""


class NonFiniteError(InputError):
    """Matrix contains NaN or Inf entries"""


class DimensionMismatchError(InputError):
    """Operands live on Hilbert spaces of different dimension"""


class InvalidStateError(InputError):
    """Matrix is not a valid density operator"""


class InvalidPovmError(InputError):
    """Operator list is not a valid POVM"""


class EmptyOtherSetError(InputError):
    """Multi-state filter called without states to reject"""


class TruncationTooSmallError(InputError):
    """Fock cutoff loses more norm than the configured bound"""

    def __init__(self, message: str, deficit: float, n_trunc: int):
        super().__init__(message)
        self.deficit = deficit
        self.n_trunc = n_trunc


class InvalidDimensionError(InputError):
    """Dimension outside the range a formula is defined for"""


class ParseError(InputError):
    """Malformed JSON state or config file"""


class InsufficientPowerError(FilteringError):
    """Probe power is below the minimum needed to reach the acceptance probability"""

    def __init__(self, n_min: float, n_total: Optional[float] = None):
        detail = f" (probe has {n_total:.6g})" if n_total is not None else ""
        super().__init__(f"Probe power below minimum required power n_min={n_min:.6g}{detail}")
        self.n_min = n_min
        self.n_total = n_total


class ToleranceExceededError(FilteringError):
    """Analytic and numeric results disagree beyond tolerance"""

    exit_code = EXIT_TOLERANCE

    def __init__(self, deviations: Dict[str, float], tolerance: float):
        failing = {k: v for k, v in deviations.items() if v > tolerance}
        super().__init__(f"Deviation above {tolerance:g}: {failing}")
        self.deviations = deviations
        self.tolerance = tolerance
