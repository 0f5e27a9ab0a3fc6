import fractions
import functools
import typing

import sympy

from discotex import _errors
from discotex import _types
from discotex._hermite import _rules

_RATIO = sympy.Symbol("r")


def _derivative_row(order: int, degree: int, at: sympy.Rational) -> typing.List:
    """Coefficients of d^order/dt^order sum_k a_k t^k at a point, per a_k."""
    return [
        sympy.ff(k, order) * at ** (k - order) if k >= order else sympy.Integer(0)
        for k in range(degree)
    ]


def _jump_integrals(s: int, ratio: sympy.Rational) -> typing.List[sympy.Rational]:
    """
    Integral over [0, 1] of the piecewise interpolant for each unit jump.

    The interpolants p_- on [0, r] and p_+ on [r, 1] have degree 2s - 1. Endpoint
    derivatives vanish (p_-^(d)(0) = p_+^(d)(1) = 0 for d < s), so the smooth rule
    contributes nothing, and p_+^(d)(r) - p_-^(d)(r) = delta_(d,jump) for d < 2s.
    """
    degree = 2 * s
    zero = [sympy.Integer(0)] * degree
    rows = []
    for d in range(s):
        rows.append(_derivative_row(d, degree, sympy.Integer(0)) + zero)
    for d in range(s):
        rows.append(zero + _derivative_row(d, degree, sympy.Integer(1)))
    for d in range(degree):
        row = _derivative_row(d, degree, ratio)
        rows.append([-v for v in row] + row)

    system = sympy.Matrix(rows)
    right_hand = sympy.zeros(2 * degree, degree)
    for d in range(degree):
        right_hand[2 * s + d, d] = 1
    try:
        solution = system.LUsolve(right_hand)
    except ValueError as error:  # pragma: no cover
        raise _errors.NumericalError(
            f"Singular collocation system at ratio {ratio}."
        ) from error

    integrals = []
    for d in range(degree):
        minus = solution[:degree, d]
        plus = solution[degree:, d]
        integrals.append(
            sum(
                minus[k] * ratio ** (k + 1) / (k + 1)
                + plus[k] * (1 - ratio ** (k + 1)) / (k + 1)
                for k in range(degree)
            )
        )
    return integrals


@functools.lru_cache(maxsize=None)
def derive_jump_quadrature(order: int) -> "_types.JumpQuadrature":
    """
    Derive the jump-correction polynomials of an order-2s rule from first principles.

    The 4s collocation conditions are solved exactly over the rationals at 2s + 1
    sample ratios r = dt_cross / dt. The integral for each unit jump is a
    polynomial in r of degree at most 2s, so exact interpolation through the samples
    recovers it, and homogeneity of degree d + 1 restores the (dt, dt_cross) form.

    :param order:
        Even rule order 2s in 2..12.
    """
    rule = _rules.get_rule(order)
    s = rule.s
    samples = [sympy.Rational(k, 2 * s) for k in range(2 * s + 1)]
    values = [_jump_integrals(s, r) for r in samples]

    coeffs = []
    for d in range(order):
        polynomial = sympy.Poly(
            sympy.interpolate([(r, v[d]) for r, v in zip(samples, values)], _RATIO),
            _RATIO,
        )
        table: "_types.RationalPolynomial" = {}
        for (power,), c in polynomial.terms():
            if c == 0:
                continue
            if power > d + 1:  # pragma: no cover
                raise _errors.NumericalError(
                    f"Jump {d} coefficient of order {order} is not homogeneous."
                )
            table[(d + 1 - power, power)] = fractions.Fraction(int(c.p), int(c.q))
        coeffs.append(table)

    return _types.JumpQuadrature(order=order, coeffs=tuple(coeffs))
