import numpy
import pytest

from discotex import _errors
from discotex import _spectral


def test_apply_derivative_constant():
    """Should return zeros for a constant field."""
    grid = _spectral.build_grid(12)
    observed = _spectral.apply_derivative(grid, 1, numpy.full(grid.size, 3.0 + 1j))
    assert numpy.max(numpy.abs(observed)) <= 1e-12


def test_apply_derivative_identity():
    """Should return ones for the identity function."""
    grid = _spectral.build_grid(12)
    observed = _spectral.apply_derivative(grid, 1, grid.nodes)
    numpy.testing.assert_allclose(observed, numpy.ones(grid.size), atol=1e-12)


def test_apply_derivative_sine():
    """Should reach spectral accuracy on a smooth function."""
    grid = _spectral.build_grid(32)
    field = numpy.sin(numpy.pi * grid.nodes)
    observed = _spectral.apply_derivative(grid, 2, field)
    numpy.testing.assert_allclose(observed, -numpy.pi ** 2 * field, atol=1e-8)


def test_apply_derivative_length_mismatch():
    """Should reject a field of the wrong length."""
    grid = _spectral.build_grid(8)
    with pytest.raises(_errors.ValidationError):
        _spectral.apply_derivative(grid, 1, numpy.zeros(8))


def test_apply_derivative_order():
    """Should reject derivative orders other than 1 and 2."""
    grid = _spectral.build_grid(8)
    with pytest.raises(_errors.ValidationError):
        _spectral.apply_derivative(grid, 3, numpy.zeros(9))
