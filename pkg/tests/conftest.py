import numpy as np
import pytest

from src.utils.cache import kraus_cache


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(autouse=True)
def clean_kraus_cache():
    yield
    kraus_cache.clear()
