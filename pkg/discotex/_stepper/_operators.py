import fractions
import typing

import numpy
from scipy import linalg

from discotex import _errors
from discotex import _hermite
from discotex import _types


def implicit_coefficients(order: int) -> typing.Dict[int, fractions.Fraction]:
    """Powers of A in Q(A) = I - c0 A + c1 A^2 - c2 A^3 + ..."""
    rule = _hermite.get_rule(order)
    coefficients = {0: fractions.Fraction(1)}
    for d, c in enumerate(rule.weights):
        coefficients[d + 1] = -c * (-1) ** d
    return coefficients


def tex_coefficients(order: int) -> typing.Dict[int, fractions.Fraction]:
    """
    Powers of A in TEX(A), the even polynomial with P(A) - Q(A) = A TEX(A).

    P carries every weight with a plus sign, so only even d survive, each doubled.
    """
    rule = _hermite.get_rule(order)
    return {d: 2 * c for d, c in enumerate(rule.weights) if d % 2 == 0}


def matrix_polynomial(
    a: numpy.ndarray,
    coefficients: typing.Dict[int, fractions.Fraction],
) -> numpy.ndarray:
    """Evaluate sum_k coefficients[k] A^k by Horner's scheme."""
    identity = numpy.eye(a.shape[0], dtype=a.dtype)
    result = numpy.zeros_like(a)
    for power in range(max(coefficients), -1, -1):
        result = result @ a + float(coefficients.get(power, 0)) * identity
    return result


def build_step_operators(
    l_matrix: numpy.ndarray,
    dt: float,
    order: int,
    tex: typing.Dict[int, fractions.Fraction] = None,
) -> "_types.StepOperators":
    """
    Precompute A = dt L, TEX(A), Q(A) and the LU factorization of Q(A).

    L is time independent, so one factorization serves every step of a run.

    :param l_matrix:
        Square evolution operator.
    :param dt:
        Positive time step.
    :param order:
        Hermite order 2s.
    :param tex:
        Replacement TEX coefficients, used to reproduce published variants.
    """
    l_matrix = numpy.asarray(l_matrix, dtype=complex)
    if l_matrix.ndim != 2 or l_matrix.shape[0] != l_matrix.shape[1]:
        raise _errors.ValidationError(
            f"The evolution operator must be square, not {l_matrix.shape}."
        )
    if not dt > 0:
        raise _errors.ValidationError(f"The time step must be positive, not {dt}.")

    a = dt * l_matrix
    q = matrix_polynomial(a, implicit_coefficients(order))
    tex_matrix = matrix_polynomial(a, tex or tex_coefficients(order))

    condition = float(numpy.linalg.cond(q))
    if not numpy.isfinite(condition) or condition > 1.0 / numpy.finfo(float).eps:
        raise _errors.NumericalError(
            f"Q(A) of order {order} at dt={dt} is singular "
            f"(condition number {condition:.3e})."
        )
    try:
        hfh = linalg.lu_factor(q, check_finite=True)
    except (ValueError, linalg.LinAlgError) as error:
        raise _errors.NumericalError(
            f"Unable to factorize Q(A) of order {order} at dt={dt}."
        ) from error

    return _types.StepOperators(
        order=order,
        dt=dt,
        l_matrix=l_matrix,
        a=a,
        tex=tex_matrix,
        q=q,
        hfh=hfh,
        condition=condition,
    )


def solve_implicit(ops: "_types.StepOperators", rhs: numpy.ndarray) -> numpy.ndarray:
    """Apply Q(A)^-1 through the cached factorization."""
    return linalg.lu_solve(ops.hfh, rhs)


def homogeneous_step(ops: "_types.StepOperators", u: numpy.ndarray) -> numpy.ndarray:
    """One step without sources or jumps: U + Q^-1 A TEX U."""
    return u + solve_implicit(ops, ops.a @ (ops.tex @ u))
