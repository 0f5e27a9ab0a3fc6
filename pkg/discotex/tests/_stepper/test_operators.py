import fractions
import math

import numpy
import pytest
from pytest import mark
from scipy import interpolate
from scipy import linalg

from discotex import _configs
from discotex import _errors
from discotex import _hermite
from discotex import _stepper

_F = fractions.Fraction


def _explicit_coefficients(order: int):
    """Powers of A in P(A) = I + c0 A + c1 A^2 + ..."""
    weights = _hermite.get_rule(order).weights
    return {0: _F(1), **{d + 1: c for d, c in enumerate(weights)}}


def test_implicit_coefficients():
    """Should alternate the signs of the endpoint weights."""
    assert _stepper.implicit_coefficients(4) == {0: 1, 1: _F(-1, 2), 2: _F(1, 12)}


def test_tex_coefficients():
    """Should double the even weights, including 1/15120 at tenth order."""
    assert _stepper.tex_coefficients(2) == {0: 1}
    assert _stepper.tex_coefficients(10) == {0: 1, 2: _F(1, 36), 4: _F(1, 15120)}


@mark.parametrize("order", _configs.ORDERS)
def test_step_polynomials_are_pade(order: int):
    """Should build the diagonal Pade approximant of the exponential."""
    s = order // 2
    taylor = [1.0 / math.factorial(k) for k in range(order + 1)]
    numerator, denominator = interpolate.pade(taylor, s)

    implicit = _stepper.implicit_coefficients(order)
    explicit = _explicit_coefficients(order)
    numpy.testing.assert_allclose(
        denominator.coeffs[::-1], [float(implicit[k]) for k in range(s + 1)], rtol=1e-8
    )
    numpy.testing.assert_allclose(
        numerator.coeffs[::-1], [float(explicit[k]) for k in range(s + 1)], rtol=1e-8
    )


@mark.parametrize("order", _configs.ORDERS)
def test_tex_completes_explicit_polynomial(order: int):
    """Should satisfy P(A) - Q(A) = A TEX(A)."""
    rng = numpy.random.default_rng(order)
    a = 0.3 * rng.normal(size=(5, 5))
    p = _stepper.matrix_polynomial(a, _explicit_coefficients(order))
    q = _stepper.matrix_polynomial(a, _stepper.implicit_coefficients(order))
    tex = _stepper.matrix_polynomial(a, _stepper.tex_coefficients(order))
    numpy.testing.assert_allclose(p - q, a @ tex, atol=1e-14)


def test_matrix_polynomial_scalar():
    """Should evaluate a polynomial of a 1 x 1 matrix as a number."""
    a = numpy.array([[2.0]])
    value = _stepper.matrix_polynomial(a, {0: _F(1), 2: _F(1, 2), 3: _F(-1)})
    assert value[0, 0] == pytest.approx(1.0 + 2.0 - 8.0)


def test_build_step_operators():
    """Should precompute the scaled operator and its factorization."""
    l_matrix = numpy.array([[0.0, 1.0], [-4.0, 0.0]])
    ops = _stepper.build_step_operators(l_matrix, 0.1, 4)
    assert ops.s == 2
    numpy.testing.assert_allclose(ops.a, 0.1 * l_matrix)
    numpy.testing.assert_allclose(
        ops.q, numpy.eye(2) - 0.5 * ops.a + ops.a @ ops.a / 12.0
    )
    assert 1.0 <= ops.condition < 2.0


@mark.parametrize(
    "l_matrix, dt",
    (
        (numpy.zeros((2, 3)), 0.1),
        (numpy.zeros(3), 0.1),
        (numpy.eye(2), 0.0),
        (numpy.eye(2), -0.1),
    ),
)
def test_build_step_operators_invalid(l_matrix: numpy.ndarray, dt: float):
    """Should reject malformed operators and non-positive steps."""
    with pytest.raises(_errors.ValidationError):
        _stepper.build_step_operators(l_matrix, dt, 2)


def test_build_step_operators_singular():
    """Should refuse an implicit polynomial that cannot be inverted."""
    with pytest.raises(_errors.NumericalError):
        _stepper.build_step_operators(numpy.array([[2.0]]), 1.0, 2)


@mark.parametrize("order", _configs.ORDERS)
def test_homogeneous_step_unitary(order: int):
    """Should preserve the norm for an anti-Hermitian operator."""
    rng = numpy.random.default_rng(3)
    h = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
    l_matrix = 1j * (h + h.conj().T)
    ops = _stepper.build_step_operators(l_matrix, 0.1, order)
    u = rng.normal(size=6) + 1j * rng.normal(size=6)
    stepped = _stepper.homogeneous_step(ops, u)
    assert numpy.linalg.norm(stepped) == pytest.approx(numpy.linalg.norm(u), rel=1e-13)


def _oscillator_error(
    order: int,
    omega: float,
    dt: float,
    total: float,
    tex: dict = None,
) -> float:
    l_matrix = numpy.array([[0.0, 1.0], [-(omega ** 2), 0.0]])
    ops = _stepper.build_step_operators(l_matrix, dt, order, tex=tex)
    u0 = numpy.array([1.0, 0.0], dtype=complex)
    u = u0
    for _ in range(int(round(total / dt))):
        u = _stepper.homogeneous_step(ops, u)
    return float(numpy.linalg.norm(u - linalg.expm(l_matrix * total) @ u0))


@mark.parametrize("order", (2, 4, 6))
def test_homogeneous_step_order(order: int):
    """Should converge at the rule order on a harmonic oscillator."""
    coarse = _oscillator_error(order, 1.0, 0.5, 2.0)
    fine = _oscillator_error(order, 1.0, 0.25, 2.0)
    assert math.log2(coarse / fine) == pytest.approx(order, abs=0.5)


def test_tenth_order_tex_regression():
    """Should keep tenth order only with the 1/15120 coefficient of A^4."""
    exact = dict(_stepper.tex_coefficients(10))
    printed = {**exact, 4: _F(1, 1520)}

    coarse = _oscillator_error(10, 4.0, 0.25, 2.0)
    fine = _oscillator_error(10, 4.0, 0.125, 2.0)
    assert 9.0 <= math.log2(coarse / fine) <= 11.0

    coarse = _oscillator_error(10, 4.0, 0.25, 2.0, tex=printed)
    fine = _oscillator_error(10, 4.0, 0.125, 2.0, tex=printed)
    assert math.log2(coarse / fine) < 8.0
