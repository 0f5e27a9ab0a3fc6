import pathlib
from unittest.mock import MagicMock
from unittest.mock import patch

import pytest
from pytest import mark

from discotex import _harness
from discotex import _types
from discotex.tests import _utils

SLOPE_SCENARIOS = (
    ([1.0, 0.5, 0.25], [3.0, 0.75, 0.1875], 2.0),
    ([1.0, 0.5, 0.25], [1e-2, 1e-14, 1e-15], None),
    ([0.4, 0.2, 0.1, 0.05], [1e-4, 6.25e-6, 3.90625e-7, 1e-14], 4.0),
    ([0.1], [1.0], None),
)


@mark.parametrize("steps, errors, expected", SLOPE_SCENARIOS)
def test_fit_slope(steps: list, errors: list, expected: float):
    """Should fit the log-log slope above the round-off floor."""
    observed = _harness.fit_slope(steps, errors)
    if expected is None:
        assert observed is None
    else:
        assert observed == pytest.approx(expected)


def test_quad_rows():
    """Should produce one row per variant, order and step count."""
    config = _utils.make_config(orders=[2], steps=[4, 8], smooth=True)
    rows = _harness.quad_rows(config)
    assert [(r.variant, r.steps) for r in rows] == [
        ("discontinuous", 4),
        ("discontinuous", 8),
        ("smooth", 4),
        ("smooth", 8),
    ]
    assert rows[0].dt == pytest.approx(0.25)
    assert all(r.abs_error >= 0 for r in rows)


def test_quad_slopes():
    """Should fit a slope per variant and order."""
    rows = [
        _types.QuadRow("discontinuous", 2, steps, 1 / steps, 0.0, 1 / steps ** 2, 0.0)
        for steps in (4, 8, 16)
    ]
    rows.append(_types.QuadRow("smooth", 2, 4, 0.25, 0.0, 0.1, 0.0))
    slopes = _harness.quad_slopes(rows)
    assert slopes["discontinuous"][2] == pytest.approx(2.0)
    assert slopes["smooth"][2] is None


def test_run_quad(tmp_path: pathlib.Path):
    """Should recover the rule orders and write both tables."""
    config = _utils.make_config(orders=[2, 4], steps=[16, 32, 64], out=str(tmp_path))
    summary = _harness.run_quad(config)
    assert len(summary["rows"]) == 6
    assert summary["slopes"]["discontinuous"][2] == pytest.approx(2.0, abs=0.5)
    assert summary["slopes"]["discontinuous"][4] == pytest.approx(4.0, abs=1.0)
    assert tmp_path.joinpath("quad.dat").exists()
    assert tmp_path.joinpath("quad_slopes.dat").exists()


@mark.slow
@mark.parametrize("order", (2, 4, 6))
def test_quad_convergence_slopes(order: int):
    """Should converge at the rule order over four step halvings."""
    config = _utils.make_config(orders=[order], steps=[8, 16, 32, 64, 128])
    slopes = _harness.quad_slopes(_harness.quad_rows(config))
    assert slopes["discontinuous"][order] == pytest.approx(order, abs=0.5)


@mark.slow
def test_quad_smooth_rule_stalls():
    """Should stall above 1e-4 without jump corrections."""
    config = _utils.make_config(orders=[4], steps=[16, 64, 256], smooth=True)
    rows = [r for r in _harness.quad_rows(config) if r.variant == "smooth"]
    assert min(r.abs_error for r in rows) > 1e-4


def test_fit_slope_floor():
    """Should fit errors below the double precision floor when the floor is lowered."""
    steps = [1 / 16, 1 / 32, 1 / 64]
    errors = [1e-16, 1e-16 / 2 ** 12, 1e-16 / 2 ** 24]
    assert _harness.fit_slope(steps, errors) is None
    assert _harness.fit_slope(steps, errors, floor=1e-40) == pytest.approx(12.0)


@mark.parametrize("precise, floor", ((False, 1e-13), (True, 1e-40)))
def test_slope_floor(precise: bool, floor: float):
    """Should lower the round-off floor for extended precision runs."""
    config = _utils.make_config(precise=precise)
    assert _harness.slope_floor(config) == floor


@patch("discotex._hermite.legendre_benchmark")
@patch("discotex._hermite.legendre_benchmark_precise")
def test_quad_rows_precise(precise: MagicMock, double: MagicMock):
    """Should evaluate the benchmark in extended precision when asked to."""
    precise.return_value = (0.1, 1e-30)
    config = _utils.make_config(orders=[12], steps=[64], precise=True)
    rows = _harness.quad_rows(config)
    assert rows[0].abs_error == 1e-30
    precise.assert_called_once()
    double.assert_not_called()


@mark.slow
@mark.parametrize("order", (8, 10, 12))
def test_quad_precise_convergence_slopes(order: int):
    """Should converge at the rule order for the high orders in extended precision."""
    config = _utils.make_config(
        orders=[order], steps=[16, 32, 64, 128, 256], precise=True
    )
    rows = _harness.quad_rows(config)
    slopes = _harness.quad_slopes(rows, _harness.slope_floor(config))
    assert slopes["discontinuous"][order] == pytest.approx(order, abs=0.5)
