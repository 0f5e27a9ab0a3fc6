import dataclasses
import fractions
import math
import typing

import numpy
from scipy import optimize

from discotex import _errors
from discotex import _types

Velocity = typing.Union[float, fractions.Fraction]

#: Root bracket for the particle position, just inside the compact domain.
_BRACKET = (1e-12, 1.0 - 1e-15)


def _x(sigma: typing.Any) -> typing.Any:
    return 0.5 * (1.0 / sigma + numpy.log(1.0 - sigma) - numpy.log(sigma))


def _height(sigma: typing.Any) -> typing.Any:
    return 0.5 * (numpy.log(1.0 - sigma) - 1.0 / sigma + numpy.log(sigma))


def coordinate_map(sigma: typing.Any) -> typing.Tuple[typing.Any, typing.Any]:
    """
    Tortoise coordinate x(sigma) and height function H(sigma) of the chart.

    The time coordinates relate by t = tau - H(sigma). Both functions diverge at
    the boundaries, so sigma must lie strictly inside (0, 1).
    """
    values = numpy.asarray(sigma, dtype=float)
    if numpy.any(values <= 0.0) or numpy.any(values >= 1.0):
        raise _errors.ValidationError(
            f"The coordinate map needs sigma strictly inside (0, 1), got {sigma}."
        )
    return _x(values), _height(values)


def gamma_squared(velocity: Velocity) -> typing.Any:
    """Lorentz factor squared, 1 / (1 - v^2), exact for rational velocities."""
    if isinstance(velocity, fractions.Fraction):
        return 1 / (1 - velocity ** 2)
    return 1.0 / (1.0 - float(velocity) ** 2)


class Trajectory(typing.Protocol):
    """Particle worldline in the compactified chart."""

    velocity: Velocity

    def position(self, tau: float) -> float:
        """Particle coordinate xi_p(tau)."""

    def position_jet(self, tau: float, length: int) -> "_types.Jet":
        """Taylor jet of xi_p about tau."""

    def phase(self, tau: float) -> float:
        """Argument tau_c(tau) of the harmonic jump data."""

    def phase_jet(self, tau: float, length: int) -> "_types.Jet":
        """Taylor jet of tau_c about tau."""

    def crossing_time(self, sigma: float) -> float:
        """Time at which the particle passes sigma; infinite when it never does."""

    def direction(self) -> int:
        """Sign of time jumps relative to spatial jumps at a node crossing."""


@dataclasses.dataclass(frozen=True)
class LinearTrajectory:
    """Uniform motion in sigma, xi_p = offset + v tau, with tau_c = tau."""

    velocity: Velocity
    offset: float = 0.0

    @property
    def v(self) -> float:
        """Velocity as a float."""
        return float(self.velocity)

    def position(self, tau: float) -> float:
        """Particle coordinate xi_p(tau)."""
        return self.offset + self.v * tau

    def position_jet(self, tau: float, length: int) -> "_types.Jet":
        """Taylor jet of xi_p about tau."""
        coefficients = numpy.zeros(length)
        coefficients[0] = self.position(tau)
        if length > 1:
            coefficients[1] = self.v
        return _types.Jet(coefficients)

    def phase(self, tau: float) -> float:
        """Argument tau_c(tau) of the harmonic jump data."""
        return tau

    def phase_jet(self, tau: float, length: int) -> "_types.Jet":
        """Taylor jet of tau_c about tau."""
        return _types.Jet.variable(tau, length)

    def crossing_time(self, sigma: float) -> float:
        """Solve offset + v tau = sigma."""
        if self.v == 0:
            return math.inf
        return (sigma - self.offset) / self.v

    def direction(self) -> int:
        """Sign of time jumps relative to spatial jumps at a node crossing."""
        return -int(numpy.sign(self.v))


@dataclasses.dataclass(frozen=True)
class BoostedTrajectory:
    """
    Particle in uniform motion x_p = v t in the (t, x) chart, seen in (tau, sigma).

    The sigma position solves x(xi) = v (tau - H(xi)) and the harmonic phase is the
    coordinate time of the particle, tau_c = tau - H(xi_p). Both rates are rational in
    xi_p, so their Taylor jets follow from Picard iteration on jets.
    """

    velocity: Velocity

    @property
    def v(self) -> float:
        """Velocity as a float."""
        return float(self.velocity)

    @property
    def gamma_squared(self) -> typing.Any:
        """Lorentz factor squared."""
        return gamma_squared(self.velocity)

    def position(self, tau: float) -> float:
        """Particle coordinate xi_p(tau)."""
        v = self.v

        def residual(xi: float) -> float:
            return v * (tau - _height(xi)) - _x(xi)

        low, high = _BRACKET
        if residual(low) * residual(high) > 0:
            raise _errors.ValidationError(
                f"The particle leaves the compact domain at tau={tau} for v={v}."
            )
        return float(
            optimize.brentq(
                residual, low, high, xtol=1e-16, rtol=4 * numpy.finfo(float).eps
            )
        )

    def _rates(self, xi: "_types.Jet") -> typing.Tuple["_types.Jet", "_types.Jet"]:
        v = self.v
        denominator = (xi * xi) * (2 * v) + (1 - v)
        phase_rate = 1.0 / denominator
        position_rate = xi * xi * (1 - xi) * (-2 * v) * phase_rate
        return position_rate, phase_rate

    def position_jet(self, tau: float, length: int) -> "_types.Jet":
        """Taylor jet of xi_p about tau."""
        start = self.position(tau)
        jet = _types.Jet.constant(start, 1)
        for _ in range(length - 1):
            jet = self._rates(jet)[0].integral(start)
        return jet

    def phase(self, tau: float) -> float:
        """Argument tau_c(tau) of the harmonic jump data."""
        return tau - float(_height(self.position(tau)))

    def phase_jet(self, tau: float, length: int) -> "_types.Jet":
        """Taylor jet of tau_c about tau."""
        if length < 2:
            return _types.Jet.constant(self.phase(tau), 1)
        xi = self.position_jet(tau, length - 1)
        return self._rates(xi)[1].integral(self.phase(tau))

    def crossing_time(self, sigma: float) -> float:
        """Time tau_i = x(sigma) / v + H(sigma) at which xi_p(tau_i) = sigma."""
        if self.v == 0 or not 0.0 < sigma < 1.0:
            return math.inf
        x, height = coordinate_map(sigma)
        return float(x / self.v + height)

    def direction(self) -> int:
        """Sign of time jumps relative to spatial jumps at a node crossing."""
        return int(numpy.sign(self.v))
