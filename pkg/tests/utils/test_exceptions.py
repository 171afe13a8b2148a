import pytest

from src.utils.exceptions import (
    EXIT_INPUT,
    EXIT_TOLERANCE,
    DimensionMismatchError,
    FilteringError,
    InputError,
    InsufficientPowerError,
    ToleranceExceededError,
    TruncationTooSmallError,
)


def test_input_errors_are_value_errors():
    with pytest.raises(ValueError):
        raise DimensionMismatchError("3 vs 4")
    assert DimensionMismatchError("x").exit_code == EXIT_INPUT


def test_truncation_error_carries_deficit():
    error = TruncationTooSmallError("too small", deficit=1e-3, n_trunc=5)
    assert isinstance(error, InputError)
    assert error.deficit == 1e-3
    assert error.n_trunc == 5


def test_insufficient_power_carries_threshold():
    error = InsufficientPowerError(0.693, 0.5)
    assert isinstance(error, FilteringError)
    assert error.n_min == 0.693
    assert "0.693" in str(error)


def test_tolerance_error_lists_failures():
    error = ToleranceExceededError({"coherent": 1e-3, "tmsv_optimal": 1e-9}, 1e-6)
    assert error.exit_code == EXIT_TOLERANCE
    assert "coherent" in str(error)
    assert "tmsv_optimal" not in str(error)
