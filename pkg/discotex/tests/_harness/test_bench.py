import pathlib
from unittest.mock import MagicMock
from unittest.mock import patch

from pytest import mark

from discotex import _configs
from discotex import _harness
from discotex.tests import _utils


@patch("discotex._stepper.evolve")
def test_run_bench(evolve: MagicMock, tmp_path: pathlib.Path):
    """Should evolve once per order and report whether time grows with order."""
    evolve.side_effect = [
        MagicMock(final_eta=1e-5, wall_seconds=1.0),
        MagicMock(final_eta=1e-9, wall_seconds=2.0),
        MagicMock(final_eta=1e-10, wall_seconds=3.0),
    ]
    config = _utils.make_config(orders=[6, 2, 4], out=str(tmp_path))
    summary = _harness.run_bench(config)

    assert [call.args[0].order for call in evolve.call_args_list] == [2, 4, 6]
    assert [r["order"] for r in summary["rows"]] == [2, 4, 6]
    assert summary["time_increases_with_order"]
    assert tmp_path.joinpath("bench.dat").exists()


@patch("discotex._stepper.evolve")
def test_run_bench_unordered_times(evolve: MagicMock):
    """Should flag timings that do not grow with order."""
    evolve.side_effect = [
        MagicMock(final_eta=1e-5, wall_seconds=2.0),
        MagicMock(final_eta=1e-9, wall_seconds=1.0),
    ]
    summary = _harness.run_bench(_utils.make_config(orders=[2, 4]))
    assert not summary["time_increases_with_order"]


@mark.slow
def test_run_bench_timing():
    """Should spend more wall time and reach a smaller error at the higher order."""
    config = _utils.make_config(
        orders=[12, 2],
        nodes=_configs.DEFAULT_NODES,
        jumps=_configs.DEFAULT_JUMPS,
        dt=_configs.DEFAULT_DT,
        tau_start=-1.52,
        tau_end=-0.52,
    )
    summary = _harness.run_bench(config)
    low, high = summary["rows"]
    assert (low["order"], high["order"]) == (2, 12)
    assert summary["time_increases_with_order"]
    assert high["eta_final"] < low["eta_final"]
