import pandas as pd
import pytest

from src.services.crosscheck_service import CrosscheckReport, CrosscheckService


def _report(deviations, tolerance=1e-6):
    rows = [{"formula": f, "point": str(k), "analytic": 0.0, "numeric": d, "deviation": d}
            for k, (f, d) in enumerate(deviations)]
    return CrosscheckReport(points=pd.DataFrame(rows), tolerance=tolerance)


def test_report_takes_worst_point_per_formula():
    report = _report([("coherent", 1e-9), ("coherent", 3e-9), ("tmsv_optimal", 2e-9)])
    assert report.deviations == {"coherent": 3e-9, "tmsv_optimal": 2e-9}
    assert report.passed


def test_report_fails_above_tolerance():
    report = _report([("coherent", 1e-9), ("squeezed", 5e-3)])
    assert not report.passed
    summary = report.summary()
    assert list(summary.columns) == ["formula", "points", "max_deviation", "tolerance", "passed"]
    assert summary.set_index("formula")["passed"].to_dict() == {"coherent": True, "squeezed": False}


def test_grids():
    assert CrosscheckService.LOSS_GRID == (0.05, 0.15, 0.25, 0.35, 0.45, 0.55, 0.65, 0.75, 0.85, 0.95)
    assert CrosscheckService.DEPOLARIZING_P[-1] == 1.0


@pytest.mark.slow
def test_loose_truncation_fails():
    report = CrosscheckService(truncation_bound=1e-2, workers=4).run()
    assert not report.passed
    assert report.deviations["coherent"] > 1e-6
    assert report.deviations["depolarizing"] <= 1e-6


@pytest.mark.slow
def test_default_settings_pass():
    report = CrosscheckService(workers=4).run()
    assert report.passed, report.deviations
    assert set(report.deviations) == {
        "depolarizing",
        "depolarizing_entangled",
        "coherent",
        "squeezed",
        "squeezed_general_phase",
        "squeezed_vacuum",
        "tmsv_optimal",
        "tmsv_photodiff",
    }
