import fractions
import os
import pathlib
from unittest.mock import patch

import pytest
from pytest import mark

from discotex import _configs
from discotex import _errors
from discotex import _types
from discotex.tests import _utils


def test_defaults():
    """Should default to the reference evolution."""
    config = _types.RunConfig().validate()
    assert config.order == _configs.DEFAULT_ORDER
    assert config.velocity == fractions.Fraction(1, 4)
    assert config.step_count == 903
    assert config.output_directory is None


def test_load_precedence(tmp_path: pathlib.Path):
    """Should prefer arguments over environment over file over defaults."""
    path = tmp_path.joinpath("discotex.yaml")
    path.write_text("order: 4\nnodes: 30\njumps: 8\nsmooth: true\nprecise: yes\n")
    environment = {"DISCOTEX_NODES": "24", "DISCOTEX_PRINTED_JUMPS": "true"}
    with patch.dict(os.environ, environment, clear=True):
        config = _types.RunConfig().load({"jumps": 14, "velocity": "1/3"}, path)

    assert config.order == 4
    assert config.nodes == 24
    assert config.jumps == 14
    assert config.velocity == fractions.Fraction(1, 3)
    assert config.printed_jumps
    assert config.smooth
    assert config.precise
    assert config.dt == _configs.DEFAULT_DT


def test_load_dashed_keys(tmp_path: pathlib.Path):
    """Should accept dashed keys and comma separated lists in config files."""
    path = tmp_path.joinpath("discotex.yaml")
    path.write_text("tau-start: 0.5\ntau-end: 1.5\norders: 2,4\nvalues: [0.1, 0.05]\n")
    with patch.dict(os.environ, {}, clear=True):
        config = _types.RunConfig().load({}, path)
    assert config.tau_start == 0.5
    assert config.tau_end == 1.5
    assert config.orders == [2, 4]
    assert config.values == [0.1, 0.05]


def test_load_config_from_environment(tmp_path: pathlib.Path):
    """Should find the config file through the environment."""
    path = tmp_path.joinpath("discotex.yaml")
    path.write_text("seed: 7\n")
    with patch.dict(os.environ, {"DISCOTEX_CONFIG": str(path)}, clear=True):
        config = _types.RunConfig().load({})
    assert config.seed == 7


def test_load_missing_file(tmp_path: pathlib.Path):
    """Should fall back to defaults when the config file does not exist."""
    with patch.dict(os.environ, {}, clear=True):
        config = _types.RunConfig().load({}, tmp_path.joinpath("missing.yaml"))
    assert config.nodes == _configs.DEFAULT_NODES


@mark.parametrize("contents", ("order: [4, 6\n", "- 4\n- 6\n"))
def test_load_invalid_file(contents: str, tmp_path: pathlib.Path):
    """Should reject malformed YAML and files that are not mappings."""
    path = tmp_path.joinpath("discotex.yaml")
    path.write_text(contents)
    with patch.dict(os.environ, {}, clear=True):
        with pytest.raises(_errors.ValidationError):
            _types.RunConfig().load({}, path)


def test_problems():
    """Should list every violated rule in a single error."""
    config = _types.RunConfig(
        command="sweep",
        order=3,
        nodes=4,
        jumps=2,
        dt=0.0,
        tau_end=-5.0,
        velocity=fractions.Fraction(1),
        threads=0,
        orders=[],
        steps=[0],
        factor="order",
        values=[],
    )
    assert len(config.problems()) == 11
    with pytest.raises(_errors.ValidationError) as info:
        config.validate()
    assert len(info.value.problems) == 11
    assert info.value.exit_code == 1


def test_invalid_orders():
    """Should reject orders outside the supported rules."""
    problems = _utils.make_config(orders=[2, 5, 14]).problems()
    assert problems == ["orders [5, 14] are not even values in [2, 12]"]


def test_with_changes():
    """Should copy the configuration without modifying the original."""
    config = _utils.make_config()
    changed = config.with_changes(order=4, out="results")
    assert changed.order == 4
    assert changed.output_directory == pathlib.Path("results")
    assert config.order == 2
    assert config.out is None


def test_to_dict():
    """Should render the configuration for logs and file headers."""
    data = _utils.make_config(out="results").to_dict()
    assert data["velocity"] == "1/4"
    assert data["out"] == "results"
    assert data["order"] == 2
    assert "pretty_print" not in data


UNREADABLE_SCENARIOS = (
    ({"DISCOTEX_ORDER": "six"}, "order"),
    ({"DISCOTEX_NODES": "45.5"}, "nodes"),
    ({"DISCOTEX_DT": "fast"}, "dt"),
    ({"DISCOTEX_VELOCITY": "quarter"}, "velocity"),
    ({"DISCOTEX_STEPS": "8,16.5"}, "steps"),
    ({"DISCOTEX_SNAPSHOT_TAU": "later"}, "snapshot_tau"),
)


@mark.parametrize("environment, key", UNREADABLE_SCENARIOS)
def test_load_unreadable_value(environment: dict, key: str, tmp_path: pathlib.Path):
    """Should report values that cannot be read as the field type."""
    with patch.dict(os.environ, environment, clear=True):
        with pytest.raises(_errors.ValidationError) as info:
            _types.RunConfig().load({}, tmp_path.joinpath("missing.yaml"))
    assert [p for p in info.value.problems if p.startswith(f"{key}: ")]


def test_load_fractional_order(tmp_path: pathlib.Path):
    """Should reject a fractional order from a config file instead of truncating."""
    path = tmp_path.joinpath("discotex.yaml")
    path.write_text("order: 6.5\njumps: 19.0\n")
    with patch.dict(os.environ, {}, clear=True):
        with pytest.raises(_errors.ValidationError) as info:
            _types.RunConfig().load({}, path)
    assert len(info.value.problems) == 1
    assert info.value.problems[0].startswith("order: ")


def test_load_collects_all_problems(tmp_path: pathlib.Path):
    """Should report unreadable values together with violated rules."""
    environment = {"DISCOTEX_ORDER": "six", "DISCOTEX_THREADS": "0"}
    with patch.dict(os.environ, environment, clear=True):
        with pytest.raises(_errors.ValidationError) as info:
            _types.RunConfig().load({"dt": "-"}, tmp_path.joinpath("missing.yaml"))
    problems = info.value.problems
    assert len(problems) == 3
    assert problems[0].startswith("order: ")
    assert problems[1].startswith("dt: ")
    assert problems[2].startswith("threads must be at least 1")
