import fractions
import functools
import math
import typing

import numpy
import sympy

from discotex import _configs
from discotex import _errors
from discotex import _types

_F = fractions.Fraction

#: Endpoint-derivative weights c_0..c_(s-1) of the order-2s two-point rules.
WEIGHTS: typing.Dict[int, typing.Tuple[fractions.Fraction, ...]] = {
    2: (_F(1, 2),),
    4: (_F(1, 2), _F(1, 12)),
    6: (_F(1, 2), _F(1, 10), _F(1, 120)),
    8: (_F(1, 2), _F(3, 28), _F(1, 84), _F(1, 1680)),
    10: (_F(1, 2), _F(1, 9), _F(1, 72), _F(1, 1008), _F(1, 30240)),
    12: (_F(1, 2), _F(5, 44), _F(1, 66), _F(1, 792), _F(1, 15840), _F(1, 665280)),
}

DT, DT_CROSS = sympy.symbols("dt dt_cross", positive=True)
_H = sympy.Rational


def _transcribed_expressions() -> typing.Dict[int, typing.Tuple[sympy.Expr, ...]]:
    dt, x = DT, DT_CROSS
    return {
        2: (
            _H(1, 2) * (dt - 2 * x),
            x / 2 * (x - dt),
        ),
        # Stored with the J1 prefactor and the J3 square restored; see DESIGN.md.
        4: (
            _H(1, 2) * (dt - 2 * x),
            _H(1, 12) * (dt ** 2 - 6 * dt * x + 6 * x ** 2),
            -_H(1, 12) * x * (dt ** 2 - 3 * dt * x + 2 * x ** 2),
            _H(1, 24) * x ** 2 * (dt - x) ** 2,
        ),
        6: (
            _H(1, 2) * (dt - 2 * x),
            _H(1, 10) * (dt ** 2 - 5 * dt * x + 5 * x ** 2),
            _H(1, 120) * (dt - 2 * x) * (dt ** 2 - 10 * dt * x + 10 * x ** 2),
            -_H(1, 120) * (dt - x) * x * (dt ** 2 - 5 * dt * x + 5 * x ** 2),
            _H(1, 240) * (dt - 2 * x) * (dt - x) ** 2 * x ** 2,
            -_H(1, 720) * (dt - x) ** 3 * x ** 3,
        ),
        8: (
            _H(1, 2) * (dt - 2 * x),
            _H(1, 28) * (3 * dt ** 2 - 14 * dt * x + 14 * x ** 2),
            _H(1, 84) * (dt - 2 * x) * (dt ** 2 - 7 * dt * x + 7 * x ** 2),
            _H(1, 1680)
            * (
                dt ** 4
                - 20 * dt ** 3 * x
                + 90 * dt ** 2 * x ** 2
                - 140 * dt * x ** 3
                + 70 * x ** 4
            ),
            -_H(1, 1680)
            * (dt - 2 * x)
            * (dt - x)
            * x
            * (dt ** 2 - 7 * dt * x + 7 * x ** 2),
            _H(1, 10080)
            * (dt - x) ** 2
            * x ** 2
            * (3 * dt ** 2 - 14 * dt * x + 14 * x ** 2),
            -_H(1, 10080) * (dt - 2 * x) * (dt - x) ** 3 * x ** 3,
            _H(1, 40320) * (dt - x) ** 4 * x ** 4,
        ),
    }


def to_rational_polynomial(expression: sympy.Expr) -> "_types.RationalPolynomial":
    """Convert a sympy polynomial in (dt, dt_cross) to an exact coefficient table."""
    polynomial = sympy.Poly(sympy.expand(expression), DT, DT_CROSS)
    return {
        (int(i), int(j)): fractions.Fraction(int(c.p), int(c.q))
        for (i, j), c in polynomial.terms()
        if c != 0
    }


def get_rule(order: int) -> "_types.HermiteRule":
    """Look up the order-2s Hermite rule."""
    if order not in WEIGHTS:
        raise _errors.ValidationError(
            f"Hermite order must be one of {_configs.ORDERS}, not {order}."
        )
    return _types.HermiteRule(order=order, weights=WEIGHTS[order])


def get_transcribed_quadrature(order: int) -> "_types.JumpQuadrature":
    """
    Jump-correction polynomials as tabulated for orders 2 through 8.

    Orders 10 and 12 are only available from ``derive_jump_quadrature``.
    """
    expressions = _transcribed_expressions()
    if order not in expressions:
        raise _errors.ValidationError(
            f"No transcribed jump quadrature for order {order}; derive it instead."
        )
    return _types.JumpQuadrature(
        order=order,
        coeffs=tuple(to_rational_polynomial(e) for e in expressions[order]),
    )


def _check_stack(rule: "_types.HermiteRule", stack: "_types.DerivativeStack"):
    if stack.s != rule.s:
        raise _errors.ValidationError(
            f"Order {rule.order} needs {rule.s} derivative levels, got {stack.s}."
        )


def smooth_step(
    rule: "_types.HermiteRule",
    left: "_types.DerivativeStack",
    right: "_types.DerivativeStack",
    dt: float,
) -> complex:
    """
    Integrate over one step from endpoint derivative data.

    :param rule:
        Hermite rule supplying the endpoint weights.
    :param left:
        Derivatives f^(0..s-1) at the start of the step.
    :param right:
        Derivatives f^(0..s-1) at the end of the step.
    :param dt:
        Step width.
    :return:
        sum_d c_d dt^(d+1) (f^(d)(t_n) + (-1)^d f^(d)(t_n+1)).
    """
    _check_stack(rule, left)
    _check_stack(rule, right)
    if dt <= 0:
        raise _errors.ValidationError(f"Step width must be positive, not {dt}.")
    return sum(
        float(c) * dt ** (d + 1) * (left.values[d] + (-1) ** d * right.values[d])
        for d, c in enumerate(rule.weights)
    )


def jump_correction(
    quad: "_types.JumpQuadrature",
    dt_cross: float,
    dt: float,
    jumps: typing.Sequence[complex],
) -> complex:
    """Correction added to the smooth step for a discontinuity at t_n + dt_cross."""
    if len(jumps) != quad.order:
        raise _errors.ValidationError(
            f"Order {quad.order} consumes {quad.order} jumps, got {len(jumps)}."
        )
    tolerance = 1e-12 * max(1.0, abs(dt))
    if dt_cross < -tolerance or dt_cross > dt + tolerance:
        raise _errors.ValidationError(
            f"Crossing offset {dt_cross} lies outside the step [0, {dt}]."
        )
    dt_cross = min(max(dt_cross, 0.0), dt)
    return complex(numpy.dot(quad.evaluate(dt, dt_cross), numpy.asarray(jumps)))


@functools.lru_cache(maxsize=None)
def closed_form_quadrature(order: int) -> "_types.JumpQuadrature":
    """
    Jump-correction polynomials from their closed form.

    With u = dt - dt_cross, the coefficient of J_j is
    u^(j+1) / (j+1)! - sum_(d <= min(j, s-1)) c_d (-1)^d dt^(d+1) u^(j-d) / (j-d)!,
    the exact integral of the unit-jump Taylor branch minus what the smooth rule
    makes of it. Agrees term by term with ``derive_jump_quadrature``.
    """
    rule = get_rule(order)

    def add_power_of_u(
        table: "_types.RationalPolynomial",
        scale: fractions.Fraction,
        dt_power: int,
        u_power: int,
    ):
        for q in range(u_power + 1):
            key = (dt_power + u_power - q, q)
            value = scale * math.comb(u_power, q) * (-1) ** q
            table[key] = table.get(key, _F(0)) + value

    coeffs = []
    for j in range(order):
        table: "_types.RationalPolynomial" = {}
        add_power_of_u(table, _F(1, math.factorial(j + 1)), 0, j + 1)
        for d, c in enumerate(rule.weights[: j + 1]):
            scale = -c * (-1) ** d / math.factorial(j - d)
            add_power_of_u(table, scale, d + 1, j - d)
        coeffs.append({k: v for k, v in table.items() if v != 0})
    return _types.JumpQuadrature(order=order, coeffs=tuple(coeffs))
