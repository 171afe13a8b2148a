import json

import pytest

from src.cli.run_config import Command, RunConfig
from src.utils.config import Config
from src.utils.exceptions import ParseError


def test_defaults_come_from_settings():
    config = RunConfig.from_sources("fig1", {})
    assert config.command == Command.FIG1
    assert config.p_ac == Config.P_AC
    assert config.points == Config.GRID_POINTS
    assert config.trunc_bound == Config.TRUNCATION_BOUND


def test_none_flags_are_ignored():
    config = RunConfig.from_sources("fig2", {"p_ac": None, "points": 7})
    assert config.p_ac == Config.P_AC
    assert config.points == 7


def test_file_keys_use_flag_names(tmp_path):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"pac": 0.25, "trunc-bound": 1e-8, "nmax": 50}))
    config = RunConfig.from_sources("fig3", {"p_ac": 0.4}, str(path))
    assert config.p_ac == 0.4
    assert config.trunc_bound == 1e-8
    assert config.n_max == 50


def test_config_file_must_be_an_object(tmp_path):
    path = tmp_path / "run.json"
    path.write_text("[1, 2]")
    with pytest.raises(ParseError):
        RunConfig.load_file(str(path))


@pytest.mark.parametrize(
    "flags",
    [{"p_ac": 0.0}, {"points": 0}, {"n_min": 5.0, "n_max": 1.0}, {"workers": 0}, {"unknown": 1}],
)
def test_invalid_options(flags):
    with pytest.raises(ParseError):
        RunConfig.from_sources("fig1", flags)


def test_filter_needs_two_states():
    with pytest.raises(ParseError):
        RunConfig.from_sources("filter", {"states": ["only.json"]})
    assert RunConfig.from_sources("filter", {"states": ["a.json", "b.json"]}).states == ["a.json", "b.json"]
