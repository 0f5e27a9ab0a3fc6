import fractions

import numpy
import pytest
from pytest import mark

from discotex import _configs
from discotex import _errors
from discotex import _hermite
from discotex import _model
from discotex import _spectral
from discotex import _stepper
from discotex import _types
from discotex.tests import _utils

QUARTER = fractions.Fraction(1, 4)


def test_detect_crossings():
    """Should find the node passed by the particle during the step."""
    grid = _spectral.build_grid(4)
    traj = _model.LinearTrajectory(0.1)
    crossings = _stepper.detect_crossings(traj, grid, 4.9, 5.1)
    assert len(crossings) == 1
    assert crossings[0].node == 2
    assert crossings[0].tau == pytest.approx(5.0)
    assert crossings[0].dt_cross == pytest.approx(0.1)
    assert crossings[0].direction == -1


def test_detect_crossings_on_step_edges():
    """Should assign a crossing at a step boundary to the step it starts."""
    grid = _spectral.build_grid(4)
    traj = _model.LinearTrajectory(0.1)
    tau_i = traj.crossing_time(float(grid.nodes[2]))
    starting = _stepper.detect_crossings(traj, grid, tau_i, tau_i + 0.2)
    assert [c.node for c in starting] == [2]
    assert starting[0].dt_cross == 0
    assert _stepper.detect_crossings(traj, grid, tau_i - 0.2, tau_i) == []


def test_detect_crossings_backwards():
    """Should refuse a step that does not advance."""
    grid = _spectral.build_grid(4)
    with pytest.raises(_errors.ValidationError):
        _stepper.detect_crossings(_model.LinearTrajectory(0.1), grid, 1.0, 1.0)


def test_upsilon_correction():
    """Should place the oriented state jumps on the crossed node."""
    crossing = _types.Crossing(node=1, tau=0.0, dt_cross=0.0, direction=-1)
    pair = (_utils.make_series([2.0]), _utils.make_series([3.0 + 1j]))
    correction = _stepper.upsilon_correction(3, [crossing], [pair])
    numpy.testing.assert_allclose(correction, [0, -2.0, 0, 0, -3.0 - 1j, 0])


def test_time_jump_correction_without_crossings():
    """Should vanish when no node is crossed."""
    table = _model.exact_time_jumps(QUARTER)
    traj = _model.BoostedTrajectory(QUARTER)
    correction = _stepper.time_jump_correction(4, [], table, traj, 0.01, 5)
    assert numpy.all(correction == 0)


def test_time_jump_correction_shallow_table():
    """Should refuse a table too shallow for the order."""
    table = _model.exact_time_jumps(QUARTER, depth=4)
    traj = _model.BoostedTrajectory(QUARTER)
    with pytest.raises(_errors.ValidationError):
        _stepper.time_jump_correction(6, [], table, traj, 0.01, 5)


def test_time_jump_correction_rows():
    """Should feed the field family to Psi rows and the operator family to Pi rows."""
    table = _model.exact_time_jumps(QUARTER)
    traj = _model.BoostedTrajectory(QUARTER)
    dt = 0.02
    crossing = _types.Crossing(node=2, tau=0.3, dt_cross=0.005, direction=1)
    correction = _stepper.time_jump_correction(2, [crossing], table, traj, dt, 4)

    weights = _hermite.closed_form_quadrature(2).evaluate(dt, 0.005)
    phase = traj.phase(0.3)
    field = [p.numeric.evaluate(phase) for p in table.field[:2]]
    operator = [p.numeric.evaluate(phase) for p in table.operator[:2]]
    assert correction[2] == pytest.approx(numpy.dot(weights, field))
    assert correction[6] == pytest.approx(numpy.dot(weights, operator))
    assert numpy.count_nonzero(correction) == 2


@mark.parametrize("order", (2, 4, 6))
def test_assemble_sources(order: int):
    """Should stack one source vector per derivative level with a zero Psi block."""
    model = _model.WaveModel.build(8, 8, QUARTER)
    sources = _stepper.assemble_sources(model, 0.5, order)
    size = model.grid.size
    assert len(sources) == order // 2
    assert sources.tau == 0.5
    for level in range(order // 2):
        assert sources[level].shape == (2 * size,)
        assert numpy.all(sources[level][:size] == 0)
    assert numpy.any(sources[0][size:] != 0)


@mark.parametrize("tau", (-0.5, 0.5, 2.0))
def test_assemble_sources_time_derivative(tau: float):
    """Should make the first source level the time derivative of the zeroth."""
    model = _model.WaveModel.build(
        _configs.DEFAULT_NODES, _configs.DEFAULT_JUMPS, QUARTER
    )
    h = 1e-4
    assert not _stepper.detect_crossings(
        model.trajectory, model.grid, tau - h, tau + h
    )
    level = _stepper.assemble_sources(model, tau, 4)[1]
    ahead = _stepper.assemble_sources(model, tau + h, 4)[0]
    behind = _stepper.assemble_sources(model, tau - h, 4)[0]
    difference = (ahead - behind) / (2 * h)
    assert numpy.linalg.norm(difference - level) <= 1e-6 * numpy.linalg.norm(level)


def test_source_bracket():
    """Should nest the source levels by Horner's scheme."""
    rng = numpy.random.default_rng(5)
    l_matrix = rng.normal(size=(4, 4))
    ops = _stepper.build_step_operators(l_matrix, 0.05, 6)
    weights = _hermite.get_rule(6).weights

    def stack(tau: float) -> "_types.SourceStack":
        return _types.SourceStack(
            tau, tuple(rng.normal(size=4) + 1j * rng.normal(size=4) for _ in range(3))
        )

    at_n, at_n1 = stack(0.0), stack(0.05)
    expected = numpy.zeros(4, dtype=complex)
    for d, c in enumerate(weights):
        for j in range(d + 1):
            expected += (
                float(c)
                * numpy.linalg.matrix_power(ops.a, d - j)
                @ (ops.dt ** (j + 1) * (at_n[j] + (-1) ** d * at_n1[j]))
            )
    observed = _stepper.source_bracket(ops, at_n, at_n1)
    numpy.testing.assert_allclose(observed, expected, rtol=1e-12, atol=1e-16)


def test_source_bracket_levels():
    """Should refuse source stacks with fewer levels than the order needs."""
    ops = _stepper.build_step_operators(numpy.eye(2) * 0.1, 0.1, 4)
    short = _types.SourceStack(0.0, (numpy.zeros(2),))
    with pytest.raises(_errors.ValidationError):
        _stepper.source_bracket(ops, short, short)
