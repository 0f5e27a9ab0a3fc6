import fractions
import math
import typing

import numpy
import sympy

from discotex import _types
from discotex._model import _chart

#: Side of the particle: LEFT holds sigma < xi_p (toward null infinity, x > x_p)
#: and RIGHT holds sigma > xi_p (toward the horizon).
LEFT = 1
RIGHT = -1


def _exact_number(value: typing.Any) -> typing.Any:
    if isinstance(value, fractions.Fraction):
        return sympy.Rational(value.numerator, value.denominator)
    return value


def branch(
    velocity: "_chart.Velocity",
    side: int,
) -> typing.Tuple["_types.TrigPair", typing.Any]:
    """
    Harmonic amplitudes and angular frequency of the field on one side.

    On each side Psi = P(theta) with theta = omega (tau + phi(sigma)) and
    P = 1/2 i gamma^2 (v + side) cos - 1/2 sin. Rational velocities produce exact
    sympy amplitudes.
    """
    v = _exact_number(velocity)
    g2 = _exact_number(_chart.gamma_squared(velocity))
    half = sympy.Rational(1, 2) if isinstance(v, sympy.Basic) else 0.5
    imaginary = sympy.I if isinstance(v, sympy.Basic) else 1j
    pair = _types.TrigPair(
        cos_amp=half * imaginary * g2 * (v + side),
        sin_amp=-half,
    )
    return pair, g2 * (1 + side * v)


def _phase_offset(side: int, sigma: numpy.ndarray) -> numpy.ndarray:
    if side == LEFT:
        return -numpy.log1p(-sigma)
    return 1.0 / sigma - numpy.log(sigma)


def _side_values(
    velocity: "_chart.Velocity",
    side: int,
    tau: float,
    sigma: numpy.ndarray,
) -> typing.Tuple[numpy.ndarray, numpy.ndarray]:
    pair, omega = branch(velocity, side)
    pair, omega = pair.numeric, complex(omega).real
    theta = omega * (tau + _phase_offset(side, sigma))
    return pair.evaluate(theta), omega * pair.derivative().evaluate(theta)


def exact_values(
    traj: "_chart.Trajectory",
    tau: float,
    sigma: typing.Any,
) -> typing.Tuple[numpy.ndarray, numpy.ndarray]:
    """
    Psi and Pi of the exact solution at the given sigma values.

    Boundary values are finite: sigma = 0 always lies left of the particle, where
    the phase offset vanishes, and sigma = 1 always lies right of it, where the
    offset is one. A value exactly at the particle is the mean of both sides.
    """
    sigma = numpy.atleast_1d(numpy.asarray(sigma, dtype=float))
    xi = traj.position(tau)
    psi = numpy.zeros(sigma.shape, dtype=complex)
    pi = numpy.zeros(sigma.shape, dtype=complex)

    masks = {LEFT: sigma < xi, RIGHT: sigma > xi}
    for side, mask in masks.items():
        if numpy.any(mask):
            psi[mask], pi[mask] = _side_values(traj.velocity, side, tau, sigma[mask])

    on = ~(masks[LEFT] | masks[RIGHT])
    if numpy.any(on):
        left = _side_values(traj.velocity, LEFT, tau, sigma[on])
        right = _side_values(traj.velocity, RIGHT, tau, sigma[on])
        psi[on] = 0.5 * (left[0] + right[0])
        pi[on] = 0.5 * (left[1] + right[1])
    return psi, pi


def exact_state(
    grid: "_types.CollocationGrid",
    traj: "_chart.Trajectory",
    tau: float,
) -> "_types.State":
    """Sample the exact solution on every node of the grid."""
    psi, pi = exact_values(traj, tau, grid.nodes)
    return _types.State(tau=tau, u=numpy.concatenate([psi, pi]))


def exact_psi_tx(t: typing.Any, x: typing.Any, velocity: float) -> typing.Any:
    """Psi(t, x) of the particle in uniform motion x_p = v t."""
    g2 = 1.0 / (1.0 - velocity ** 2)
    side = numpy.sign(x - velocity * t)
    theta = g2 * (t - x * velocity - numpy.abs(x - velocity * t))
    return -0.5 * numpy.sin(theta) + 0.5j * g2 * (velocity + side) * numpy.cos(theta)


def exact_pi_tx(t: typing.Any, x: typing.Any, velocity: float) -> typing.Any:
    """Time derivative of Psi(t, x) at fixed x."""
    g2 = 1.0 / (1.0 - velocity ** 2)
    side = numpy.sign(x - velocity * t)
    theta = g2 * (t - x * velocity - numpy.abs(x - velocity * t))
    rate = g2 * (1.0 + velocity * side)
    return rate * (
        -0.5 * numpy.cos(theta) - 0.5j * g2 * (velocity + side) * numpy.sin(theta)
    )


def time_jump_pair(velocity: "_chart.Velocity", a: int) -> "_types.TrigPair":
    """
    Jump of d^a Psi / d tau^a across the particle as a pair in tau_c.

    The jump is taken right minus left, at fixed sigma on the particle worldline.
    """
    right, omega_right = branch(velocity, RIGHT)
    left, omega_left = branch(velocity, LEFT)
    return right.derivative(a) * omega_right ** a - left.derivative(a) * omega_left ** a


def seed_jumps(
    traj: "_chart.Trajectory",
    tau: float,
    length: int,
) -> typing.Tuple["_types.Jet", "_types.Jet"]:
    """
    Jets of the initializing jumps J_0 and J_1 about tau.

    J_0 is the jump of Psi and J_1 the jump of its sigma derivative, both as
    functions of time along the worldline.
    """
    phase = traj.phase_jet(tau, length)
    xi = traj.position_jet(tau, length)

    j0 = time_jump_pair(traj.velocity, 0).to_jet(phase)

    right, omega_right = branch(traj.velocity, RIGHT)
    left, omega_left = branch(traj.velocity, LEFT)
    omega_right, omega_left = complex(omega_right).real, complex(omega_left).real
    slope_left = omega_left / (1.0 - xi)
    slope_right = -omega_right * (1.0 + xi) / (xi * xi)
    j1 = slope_right * right.derivative().to_jet(phase) - slope_left * (
        left.derivative().to_jet(phase)
    )
    return j0, j1


def _log_series(a: float, sign: float, count: int) -> numpy.ndarray:
    """Coefficients of ln(a + sign w) - ln(a) in w."""
    series = numpy.zeros(count)
    for k in range(1, count):
        series[k] = -((-sign / a) ** k) / k
    return series


def exact_spatial_jumps(
    traj: "_chart.Trajectory",
    tau: float,
    m_max: int,
) -> numpy.ndarray:
    """
    Jumps J_0..J_M of the sigma derivatives of Psi across the particle at tau.

    Each side is expanded as a Taylor series in w = sigma - xi_p, composing the
    harmonic amplitudes with the series of its phase. This is independent of the
    jump recurrence.
    """
    count = m_max + 1
    xi = traj.position(tau)
    k = numpy.arange(count)

    left_offset = -_log_series(1.0 - xi, -1.0, count)
    left_offset[0] = -math.log1p(-xi)

    right_offset = (-1.0) ** k / xi ** (k + 1) - _log_series(xi, 1.0, count)
    right_offset[0] = 1.0 / xi - math.log(xi)

    factorials = numpy.array([math.factorial(m) for m in range(count)], dtype=float)
    values = numpy.zeros(count, dtype=complex)
    for side, offset in ((RIGHT, right_offset), (LEFT, left_offset)):
        pair, omega = branch(traj.velocity, side)
        omega = complex(omega).real
        theta = offset * omega
        theta[0] += omega * tau
        series = pair.numeric.to_jet(_types.Jet(theta)).coefficients
        values += (series if side == RIGHT else -series) * factorials
    return values
