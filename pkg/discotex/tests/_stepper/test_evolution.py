import fractions
import math
from unittest.mock import patch

import numpy
import pytest
from pytest import mark

from discotex import _configs
from discotex import _errors
from discotex import _model
from discotex import _stepper
from discotex.tests import _utils

QUARTER = fractions.Fraction(1, 4)


def test_step_advances_exact_data():
    """Should stay close to the exact solution over one step."""
    model = _model.WaveModel.build(16, 10, QUARTER)
    ops = _stepper.build_step_operators(model.system_matrix, 0.01, 4)
    state = model.exact_state(0.0)
    stepped = _stepper.step(state, ops, model)
    assert stepped.tau == pytest.approx(0.01)
    exact = model.exact_state(0.01)
    assert numpy.max(numpy.abs(stepped.u - exact.u)) < 1e-4


def test_step_reuses_cached_sources():
    """Should assemble sources once per instant."""
    model = _model.WaveModel.build(16, 10, QUARTER)
    ops = _stepper.build_step_operators(model.system_matrix, 0.01, 2)
    cache = {}
    state = _stepper.step(model.exact_state(0.0), ops, model, cache)
    assert set(cache) == {0.0, state.tau}
    with patch("discotex._stepper._sources.assemble_sources") as assemble:
        _stepper.step(model.exact_state(0.0), ops, model, cache)
    assemble.assert_not_called()


def test_step_non_finite():
    """Should stop as soon as the state stops being finite."""
    model = _model.WaveModel.build(16, 10, QUARTER)
    ops = _stepper.build_step_operators(model.system_matrix, 0.01, 2)
    state = model.exact_state(0.0)
    nan = numpy.full(state.u.shape, numpy.nan, dtype=complex)
    with patch("discotex._stepper._operators.solve_implicit", return_value=nan):
        with pytest.raises(_errors.NumericalError):
            _stepper.step(state, ops, model)


def test_step_shallow_table():
    """Should refuse an order the time-jump table cannot serve."""
    model = _model.WaveModel.build(16, 10, QUARTER)
    ops = _stepper.build_step_operators(model.system_matrix, 0.01, 12)
    table = _model.exact_time_jumps(QUARTER, depth=8)
    shallow = _model.WaveModel(
        grid=model.grid,
        coefficients=model.coefficients,
        trajectory=model.trajectory,
        table=table,
        m_max=model.m_max,
    )
    with pytest.raises(_errors.ValidationError):
        _stepper.step(shallow.exact_state(0.0), ops, shallow)


def test_evolve_short_window():
    """Should record the waveform and error at every step of a short run."""
    config = _utils.make_config()
    result = _stepper.evolve(config)
    assert result.steps == 5
    assert result.psi_waveform.shape == (6,)
    assert result.eta[0] == pytest.approx(0.0, abs=1e-14)
    assert numpy.all(numpy.isfinite(result.eta))
    assert result.final_eta < 1e-2
    assert result.snapshot_tau == pytest.approx(config.tau_end)
    assert set(result.diagnostics) == {
        "crossings",
        "node_instant_crossings",
        "particle_on_node",
        "condition_number",
    }
    assert result.wall_seconds >= 0


def test_evolve_snapshot():
    """Should keep the state nearest the requested snapshot time."""
    config = _utils.make_config(snapshot_tau=0.021)
    result = _stepper.evolve(config)
    assert result.snapshot_tau == pytest.approx(0.02)
    assert result.snapshot_psi.shape == (17,)


def test_evolve_invalid_config():
    """Should validate the configuration before building anything."""
    with pytest.raises(_errors.ValidationError):
        _stepper.evolve(_utils.make_config(order=3))


def test_evolve_model_levels():
    """Should refuse a model carrying fewer source levels than the order needs."""
    model = _model.WaveModel.build(16, 10, QUARTER, levels=1)
    with pytest.raises(_errors.ValidationError):
        _stepper.evolve(_utils.make_config(order=4), model)


@mark.slow
@mark.parametrize("order, bound", ((2, 5.5e-5), (4, 1e-9), (6, 1e-9)))
def test_evolve_reference_accuracy(order: int, bound: float):
    """Should reach the reference accuracy over the full window."""
    config = _utils.make_config(
        order=order,
        nodes=_configs.DEFAULT_NODES,
        jumps=_configs.DEFAULT_JUMPS,
        dt=_configs.DEFAULT_DT,
        tau_start=_configs.DEFAULT_TAU_START,
        tau_end=_configs.DEFAULT_TAU_END,
    )
    result = _stepper.evolve(config)
    assert result.steps == 903
    assert numpy.all(numpy.isfinite(result.eta))
    assert result.final_eta <= bound
    assert result.diagnostics["crossings"] > 0


CONVERGENCE_SCENARIOS = (
    (2, (0.04, 0.02, 0.01)),
    (4, (0.04, 0.02, 0.01)),
    (6, (0.2, 0.1, 0.05)),
)


@mark.slow
@mark.parametrize("order, sizes", CONVERGENCE_SCENARIOS)
def test_evolve_convergence_order(order: int, sizes: tuple):
    """Should converge at the rule order as the step halves."""
    errors = []
    for dt in sizes:
        config = _utils.make_config(
            order=order,
            nodes=_configs.DEFAULT_NODES,
            jumps=_configs.DEFAULT_JUMPS,
            dt=dt,
            tau_start=-1.52,
            tau_end=-0.52,
        )
        errors.append(_stepper.evolve(config).final_eta)
    slope = math.log2(errors[0] / errors[-1]) / 2
    assert slope == pytest.approx(order, abs=0.5)


@mark.slow
def test_evolve_accuracy_stagnates():
    """Should keep the highest orders within a decade of sixth order."""
    errors = {}
    for order in (6, 10, 12):
        config = _utils.make_config(
            order=order,
            nodes=_configs.DEFAULT_NODES,
            jumps=_configs.DEFAULT_JUMPS,
            dt=_configs.DEFAULT_DT,
            tau_start=_configs.DEFAULT_TAU_START,
            tau_end=_configs.DEFAULT_TAU_END,
        )
        errors[order] = _stepper.evolve(config).final_eta
    assert errors[10] <= 10 * errors[6]
    assert errors[12] <= 10 * errors[6]
