import typing

import numpy

from discotex import _collocation
from discotex import _errors
from discotex import _hermite
from discotex import _types

JumpPair = typing.Tuple["_types.JumpSeries", "_types.JumpSeries"]


def assemble_sources(
    model: typing.Any,
    tau: float,
    order: int,
    jump_pair: JumpPair = None,
) -> "_types.SourceStack":
    """
    Distributional source vectors s, s^(1), ..., s^(s-1) at tau.

    The Pi block collects the chi~-weighted second-derivative correction and the
    iota~-weighted first-derivative correction of Psi together with the
    eps~-weighted first-derivative correction of Pi; the Psi block is zero.
    """
    levels = _hermite.get_rule(order).s
    grid, traj, rows = model.grid, model.trajectory, model.rows
    psi_series, pi_series = jump_pair or model.jump_data(tau)
    xi = traj.position(tau)

    bottom = sum(
        _collocation.source_levels(grid, rows[key], deriv, series, xi, levels, traj)
        for key, deriv, series in (
            ("c_ss", 2, psi_series),
            ("c_s", 1, psi_series),
            ("c_pi_s", 1, pi_series),
        )
    )
    vectors = tuple(
        numpy.concatenate([numpy.zeros(grid.size, complex), row]) for row in bottom
    )
    return _types.SourceStack(tau=tau, vectors=vectors)


def detect_crossings(
    traj: typing.Any,
    grid: "_types.CollocationGrid",
    tau_n: float,
    tau_n1: float,
) -> typing.List["_types.Crossing"]:
    """
    Node crossings with tau_n <= tau_i < tau_n1, sorted by time.

    A crossing exactly at tau_n belongs to this step with dt_cross = 0.
    """
    if not tau_n < tau_n1:
        raise _errors.ValidationError(
            f"A step must advance in time, got [{tau_n}, {tau_n1})."
        )
    crossings = []
    for node, sigma in enumerate(grid.nodes):
        tau_i = traj.crossing_time(float(sigma))
        if tau_n <= tau_i < tau_n1:
            crossings.append(
                _types.Crossing(
                    node=node,
                    tau=tau_i,
                    dt_cross=tau_i - tau_n,
                    direction=traj.direction(),
                )
            )
    return sorted(crossings, key=lambda c: (c.tau, c.node))


def upsilon_correction(
    size: int,
    crossings: typing.Sequence["_types.Crossing"],
    jump_pairs: typing.Sequence[JumpPair],
) -> numpy.ndarray:
    """
    Jump of the state itself at each crossed node.

    The Psi row receives J_0(tau_i) and the Pi row JJ_0(tau_i), oriented by the
    crossing direction.
    """
    correction = numpy.zeros(2 * size, dtype=complex)
    for crossing, (psi_series, pi_series) in zip(crossings, jump_pairs):
        correction[crossing.node] += crossing.direction * psi_series.entries[0].value
        correction[size + crossing.node] += (
            crossing.direction * pi_series.entries[0].value
        )
    return correction


def time_jump_correction(
    order: int,
    crossings: typing.Sequence["_types.Crossing"],
    table: "_types.TimeJumpTable",
    traj: typing.Any,
    dt: float,
    size: int,
) -> numpy.ndarray:
    """
    Hermite jump corrections for the integrand discontinuities at crossed nodes.

    Psi rows consume the field family of the table and Pi rows the operator family,
    both evaluated at the particle phase of the crossing instant.
    """
    table.require(order)
    correction = numpy.zeros(2 * size, dtype=complex)
    if not crossings:
        return correction

    quad = _hermite.closed_form_quadrature(order)
    field = [p.numeric for p in table.field[:order]]
    operator = [p.numeric for p in table.operator[:order]]
    for crossing in crossings:
        phase = traj.phase(crossing.tau)
        psi_jumps = [crossing.direction * p.evaluate(phase) for p in field]
        pi_jumps = [crossing.direction * p.evaluate(phase) for p in operator]
        correction[crossing.node] += _hermite.jump_correction(
            quad, crossing.dt_cross, dt, psi_jumps
        )
        correction[size + crossing.node] += _hermite.jump_correction(
            quad, crossing.dt_cross, dt, pi_jumps
        )
    return correction
