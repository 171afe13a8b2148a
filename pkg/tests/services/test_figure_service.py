import numpy as np
import pandas as pd
import pytest

from src.reports.csv_report import INSUFFICIENT
from src.services.figure_service import FigureService, log_grid
from src.utils.exceptions import InputError


class TestLogGrid:
    def test_endpoints(self):
        grid = log_grid(0.1, 1000.0, 60)
        assert len(grid) == 60
        assert grid[0] == pytest.approx(0.1)
        assert grid[-1] == pytest.approx(1000.0)
        assert np.all(np.diff(np.log10(grid)) > 0)

    def test_single_point(self):
        np.testing.assert_array_equal(log_grid(2.0, 5.0, 1), [2.0])

    @pytest.mark.parametrize("n_lo, n_hi, points", [(0.0, 1.0, 5), (2.0, 1.0, 5), (0.1, 1.0, 0)])
    def test_invalid(self, n_lo, n_hi, points):
        with pytest.raises(InputError):
            log_grid(n_lo, n_hi, points)


class TestFigures:
    def test_fig1(self):
        table = FigureService(0.5, [0.5, 4.0, 10.0]).fig1()
        assert list(table.columns) == ["n_total", "ratio", "R_M"]
        assert len(table) == 12
        assert list(table["ratio"]) == [0.0] * 3 + [0.2] * 3 + [0.9] * 3 + [1.0] * 3

        def cell(ratio, n):
            return table[(table["ratio"] == ratio) & (table["n_total"] == n)]["R_M"].iloc[0]

        assert cell(0.0, 0.5) == INSUFFICIENT
        assert cell(0.0, 4.0) == pytest.approx(0.659266, abs=1e-6)
        assert cell(1.0, 4.0) == pytest.approx(1.0 - np.sqrt(0.25), abs=1e-12)
        assert cell(1.0, 10.0) == pytest.approx(0.163340, abs=1e-6)

    def test_fig2(self):
        table = FigureService(0.5, [0.5, 1.0, 10.0]).fig2()
        assert list(table.columns) == ["n_total", "m_bar_opt_ratio", "R_M_opt", "R_M_opt_over_R_M_sv"]
        below, middle, above = table.to_dict("records")

        assert below["R_M_opt"] == INSUFFICIENT
        assert 0.0 <= middle["m_bar_opt_ratio"] <= 1.0
        assert middle["R_M_opt_over_R_M_sv"] == INSUFFICIENT
        assert 0.0 <= above["m_bar_opt_ratio"] <= 1.0
        assert 0.0 < above["R_M_opt_over_R_M_sv"] <= 1.0 + 1e-12

    def test_fig3(self):
        grid = [0.5, 2.0, 10.0, 100.0]
        table = FigureService(0.5, grid).fig3()
        assert list(table.columns) == ["n_total", "coherent", "sq_opt", "sv", "tmsv_opt", "tmsv_photodiff"]

        coherent = FigureService(0.5, grid).fig1().query("ratio == 0.0")["R_M"].tolist()
        assert table["coherent"].tolist() == coherent
        assert table["sv"].iloc[1] == INSUFFICIENT
        assert table["tmsv_opt"].iloc[0] != INSUFFICIENT

        last = table.iloc[-1]
        assert last["tmsv_opt"] <= last["sq_opt"] <= last["coherent"]
        assert last["tmsv_opt"] <= last["tmsv_photodiff"]

    def test_thresholds(self):
        table = FigureService(0.5, [1.0]).thresholds()
        values = dict(zip(table["probe"], table["n_min"]))
        assert values["coherent"] == pytest.approx(np.log(2.0))
        assert values["squeezed_optimized"] == pytest.approx(0.60, abs=0.01)
        assert values["squeezed_vacuum"] == pytest.approx(3.0)
        assert values["tmsv_optimal"] == pytest.approx(np.sqrt(2.0) - 1.0)
        assert values["tmsv_photodiff"] == pytest.approx(1.0)

    def test_worker_count_does_not_change_results(self):
        grid = log_grid(0.1, 100.0, 12)
        serial = FigureService(0.5, grid, workers=1).fig3()
        threaded = FigureService(0.5, grid, workers=4).fig3()
        pd.testing.assert_frame_equal(serial, threaded)

    def test_empty_grid(self):
        with pytest.raises(InputError):
            FigureService(0.5, [])

    def test_asymptotic_ratio(self):
        table = FigureService(0.5, [1000.0]).fig2()
        assert table["R_M_opt_over_R_M_sv"].iloc[0] == pytest.approx(0.9497, abs=1e-3)
