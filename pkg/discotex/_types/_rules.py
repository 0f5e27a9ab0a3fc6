import dataclasses
import fractions
import typing

import numpy

#: Exact rational polynomial in (dt, dt_cross): {(power of dt, power of dt_cross): c}.
RationalPolynomial = typing.Dict[typing.Tuple[int, int], fractions.Fraction]


@dataclasses.dataclass(frozen=True)
class HermiteRule:
    """
    Two-point Hermite (Obreshkov) rule of even order 2s.

    The smooth update over one step of width dt is
    sum_d c_d dt^(d+1) (f^(d)(t_n) + (-1)^d f^(d)(t_n+1)).
    """

    order: int
    weights: typing.Tuple[fractions.Fraction, ...]

    @property
    def s(self) -> int:
        """Number of derivative levels consumed at each endpoint."""
        return self.order // 2

    @property
    def float_weights(self) -> numpy.ndarray:
        """Weights as floating point values for evaluation."""
        return numpy.array([float(w) for w in self.weights])

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        """Convert to a dictionary representation that is JSON serializable for logs."""
        return {"order": self.order, "weights": [str(w) for w in self.weights]}


@dataclasses.dataclass(frozen=True)
class JumpQuadrature:
    """
    Jump-correction polynomials of an order-2s discontinuous Hermite rule.

    ``coeffs[d]`` multiplies the jump J_d of the d-th integrand derivative; each is
    homogeneous of degree d + 1 in (dt, dt_cross).
    """

    order: int
    coeffs: typing.Tuple[RationalPolynomial, ...]

    def evaluate(self, dt: float, dt_cross: float) -> numpy.ndarray:
        """Floating point values of every coefficient polynomial."""
        return numpy.array(
            [
                sum(
                    float(c) * dt ** i * dt_cross ** j
                    for (i, j), c in polynomial.items()
                )
                for polynomial in self.coeffs
            ]
        )

    def evaluate_exact(
        self,
        dt: fractions.Fraction,
        dt_cross: fractions.Fraction,
    ) -> typing.List[fractions.Fraction]:
        """Exact rational values of every coefficient polynomial."""
        return [
            sum(
                (c * dt ** i * dt_cross ** j for (i, j), c in polynomial.items()),
                fractions.Fraction(0),
            )
            for polynomial in self.coeffs
        ]

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        """Convert to a dictionary representation that is JSON serializable for logs."""
        return {
            "order": self.order,
            "coeffs": [
                {f"dt^{i} dtx^{j}": str(c) for (i, j), c in sorted(p.items())}
                for p in self.coeffs
            ],
        }


@dataclasses.dataclass(frozen=True)
class DerivativeStack:
    """Integrand derivatives f^(0..s-1) at one endpoint of a step."""

    values: typing.Tuple[complex, ...]

    @property
    def s(self) -> int:
        """Number of derivative levels held."""
        return len(self.values)
