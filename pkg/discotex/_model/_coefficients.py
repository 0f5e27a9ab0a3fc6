import dataclasses
import math
import typing

import numpy
from numpy.polynomial import Polynomial


@dataclasses.dataclass(frozen=True)
class PoleRational:
    """
    Rational function ``polynomial(sigma) + residue / (sigma + 1)``.

    Every ratio of an operator coefficient to Gamma reduces to this form on the
    compactified domain, so derivatives of any order have closed forms.
    """

    polynomial: Polynomial
    residue: float = 0.0

    def __call__(self, sigma: typing.Any, k: int = 0) -> typing.Any:
        """Value of the k-th sigma derivative."""
        sigma = numpy.asarray(sigma, dtype=float)
        smooth = self.polynomial.deriv(k)(sigma) if k else self.polynomial(sigma)
        pole = self.residue * (-1) ** k * math.factorial(k) / (sigma + 1.0) ** (k + 1)
        return smooth + pole


def _sigma() -> Polynomial:
    return Polynomial([0.0, 1.0])


@dataclasses.dataclass(frozen=True)
class OperatorCoefficients:
    """
    Coefficients of Gamma Psi_tt + epsilon Psi_st + varrho Psi_t + chi Psi_ss
    + iota Psi_s + V Psi = 0 together with their ratios to Gamma.
    """

    gamma: Polynomial
    epsilon: Polynomial
    varrho: Polynomial
    chi: Polynomial
    iota: Polynomial
    potential: Polynomial
    tildes: typing.Dict[str, PoleRational]

    def derivative(self, name: str, k: int = 0) -> Polynomial:
        """k-th sigma derivative of a raw coefficient polynomial."""
        polynomial: Polynomial = getattr(self, name)
        return polynomial.deriv(k) if k else polynomial

    def value(self, name: str, sigma: typing.Any, k: int = 0) -> typing.Any:
        """Evaluate a raw coefficient or one of its derivatives."""
        return self.derivative(name, k)(numpy.asarray(sigma, dtype=float))

    def tilde(self, name: str, sigma: typing.Any, k: int = 0) -> typing.Any:
        """Evaluate the simplified ratio of a coefficient to Gamma."""
        return self.tildes[name](sigma, k)

    def ratio(self, name: str, sigma: typing.Any) -> typing.Any:
        """Unsimplified coefficient / Gamma; singular where Gamma vanishes."""
        return self.value(name, sigma) / self.value("gamma", sigma)

    def evolution_rows(self, nodes: numpy.ndarray) -> typing.Dict[str, numpy.ndarray]:
        """
        Nodal factors of the Pi evolution equation.

        Pi_t = c_ss Psi'' + c_s Psi' + c_v Psi + c_pi_s Pi' + c_pi Pi, where each
        factor is the negated tilde coefficient.
        """
        return {
            "c_ss": -self.tilde("chi", nodes),
            "c_s": -self.tilde("iota", nodes),
            "c_v": -self.tilde("potential", nodes),
            "c_pi_s": -self.tilde("epsilon", nodes),
            "c_pi": -self.tilde("varrho", nodes),
        }


def flat_wave_coefficients() -> OperatorCoefficients:
    """Coefficients of the flat wave operator in the hyperboloidal minimal gauge."""
    s = _sigma()
    one = Polynomial([1.0])
    return OperatorCoefficients(
        gamma=-4 * s ** 2 * (s ** 2 - 1),
        epsilon=-4 * (s - 1) * s ** 2 * (2 * s ** 2 - 1),
        varrho=-8 * (s - 1) * s ** 3,
        chi=-4 * (s - 1) ** 2 * s ** 4,
        iota=-4 * (s - 1) * s ** 3 * (3 * s - 2),
        potential=Polynomial([0.0]),
        tildes={
            "epsilon": PoleRational(2 * s - 2 * one, 1.0),
            "varrho": PoleRational(2 * one, -2.0),
            "chi": PoleRational(s ** 2 - 2 * s + 2 * one, -2.0),
            "iota": PoleRational(3 * s - 5 * one, 5.0),
            "potential": PoleRational(Polynomial([0.0]), 0.0),
        },
    )
