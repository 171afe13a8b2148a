import numpy as np
import pytest

from src.states.budget import PowerBudget
from src.utils.exceptions import InputError


def test_from_ratio():
    budget = PowerBudget.from_ratio(10.0, 0.2)
    assert budget.m_bar == pytest.approx(2.0)
    assert budget.n_bar == pytest.approx(8.0)
    assert budget.alpha_abs == pytest.approx(np.sqrt(8.0))
    assert np.sinh(budget.squeezing_r) ** 2 == pytest.approx(2.0)


def test_from_parameters():
    budget = PowerBudget.from_parameters(1.0, 0.5)
    assert budget.n_total == pytest.approx(1.0 + np.sinh(0.5) ** 2)
    assert budget.squeezing_r == pytest.approx(0.5)


@pytest.mark.parametrize("ratio", [-0.1, 1.1])
def test_ratio_range(ratio):
    with pytest.raises(InputError):
        PowerBudget.from_ratio(1.0, ratio)


def test_budget_must_add_up():
    with pytest.raises(InputError):
        PowerBudget(n_total=1.0, m_bar=0.5, n_bar=0.6)


def test_negative_photons_rejected():
    with pytest.raises(InputError):
        PowerBudget(n_total=0.0, m_bar=-1.0, n_bar=1.0)
