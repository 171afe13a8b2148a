import json

import numpy as np
import pytest

from src.cli.main import build_parser, main
from src.linalg.matrices import matrix_to_json
from src.utils.exceptions import EXIT_INPUT, EXIT_OK, EXIT_TOLERANCE

SMALL_GRID = ["--nmin", "0.5", "--nmax", "10", "--points", "5"]


def _write_state(path, matrix):
    path.write_text(json.dumps(matrix_to_json(np.asarray(matrix, dtype=complex))))
    return str(path)


@pytest.fixture
def states(tmp_path):
    return (
        _write_state(tmp_path / "rho0.json", np.diag([0.75, 0.25])),
        _write_state(tmp_path / "rho1.json", np.diag([1.0, 0.0])),
    )


def test_filter_to_file(states, tmp_path):
    out = tmp_path / "filter.json"
    assert main(["filter", *states, "--out", str(out)]) == EXIT_OK
    result = json.loads(out.read_text())
    assert result["P"] == pytest.approx(0.25)
    assert result["n"] == 2 and result["m"] == 1


def test_filter_to_stdout_with_simulation(states, capsys):
    assert main(["filter", *states, "--simulate", "500", "--seed", "4"]) == EXIT_OK
    result = json.loads(capsys.readouterr().out)
    assert result["simulation"]["rho1"]["counts"][0] == 0


def test_filter_malformed_state(states, tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("[1, 2")
    assert main(["filter", states[0], str(broken)]) == EXIT_INPUT


def test_filter_needs_two_states(states):
    assert main(["filter", states[0]]) == EXIT_INPUT


def test_filter_dimension_mismatch(states, tmp_path):
    qutrit = _write_state(tmp_path / "qutrit.json", np.eye(3) / 3)
    assert main(["filter", states[0], qutrit]) == EXIT_INPUT


def test_usage_errors_exit_with_input_code():
    with pytest.raises(SystemExit) as info:
        main(["fig1", "--no-such-flag"])
    assert info.value.code == EXIT_INPUT


def test_invalid_acceptance_probability():
    assert main(["fig1", "--pac", "1.5"]) == EXIT_INPUT


def test_empty_grid():
    assert main(["fig1", "--nmin", "10", "--nmax", "1"]) == EXIT_INPUT


def test_figure_output_is_deterministic(tmp_path):
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["fig3", *SMALL_GRID, "--out", str(first)]) == EXIT_OK
    assert main(["fig3", *SMALL_GRID, "--workers", "3", "--out", str(second)]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()
    lines = first.read_text().splitlines()
    assert lines[0] == "n_total,coherent,sq_opt,sv,tmsv_opt,tmsv_photodiff"
    assert len(lines) == 6


def test_fig1_sentinel(capsys):
    assert main(["fig1", *SMALL_GRID]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "n_total,ratio,R_M"
    assert lines[1] == "0.5,0,insufficient"
    assert len(lines) == 1 + 4 * 5


def test_thresholds(capsys):
    assert main(["thresholds"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "probe,n_min"
    assert lines[1].startswith("coherent,0.69314718")


def test_config_file_with_flag_override(tmp_path, capsys):
    config = tmp_path / "run.json"
    config.write_text(json.dumps({"pac": 0.3, "nmin": 1, "nmax": 10, "points": 3}))

    assert main(["fig1", "--config", str(config)]) == EXIT_OK
    assert len(capsys.readouterr().out.splitlines()) == 1 + 4 * 3

    assert main(["fig1", "--config", str(config), "--points", "2"]) == EXIT_OK
    assert len(capsys.readouterr().out.splitlines()) == 1 + 4 * 2


def test_config_file_unknown_key(tmp_path):
    config = tmp_path / "run.json"
    config.write_text(json.dumps({"colour": "blue"}))
    assert main(["fig1", "--config", str(config)]) == EXIT_INPUT


@pytest.mark.slow
def test_crosscheck_with_loose_truncation(tmp_path):
    out = tmp_path / "crosscheck.csv"
    assert main(["crosscheck", "--trunc-bound", "1e-2", "--workers", "4", "--out", str(out)]) == EXIT_TOLERANCE
    assert out.read_text().startswith("formula,points,max_deviation,tolerance,passed\n")


def test_every_command_is_registered():
    parser = build_parser()
    for command in ("fig1", "fig2", "fig3", "crosscheck", "thresholds"):
        assert parser.parse_args([command]).command == command
    assert parser.parse_args(["filter", "a.json", "b.json"]).states == ["a.json", "b.json"]
