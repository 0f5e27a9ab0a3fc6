import numpy

from discotex import _errors
from discotex import _types


def _node_differences(n: int) -> numpy.ndarray:
    """
    Pairwise differences sigma_i - sigma_j of the Lobatto nodes on [0, 1].

    Uses the product form sin(pi (i + j) / 2n) sin(pi (i - j) / 2n), which avoids the
    cancellation of subtracting nearly equal node coordinates near the endpoints.
    """
    i, j = numpy.mgrid[0 : n + 1, 0 : n + 1]
    return numpy.sin(numpy.pi * (i + j) / (2 * n)) * numpy.sin(
        numpy.pi * (i - j) / (2 * n)
    )


def _with_negative_sum_diagonal(matrix: numpy.ndarray) -> numpy.ndarray:
    numpy.fill_diagonal(matrix, 0.0)
    numpy.fill_diagonal(matrix, -matrix.sum(axis=1))
    return matrix


def build_grid(n: int) -> "_types.CollocationGrid":
    """
    Build the Chebyshev-Gauss-Lobatto grid of n + 1 nodes on [0, 1].

    Nodes ascend from 0 to 1 and are the affine image of cos(pi j / n). The first
    derivative matrix uses the barycentric ratio form with the diagonal fixed by the
    negative-sum rule; the second derivative matrix comes from the same recursion
    one level up rather than from squaring the first.

    :param n:
        Node-index maximum. Must be at least 1.
    """
    if not isinstance(n, (int, numpy.integer)) or n < 1:
        raise _errors.ValidationError(
            f"A collocation grid needs n >= 1 (got {n}) for any interior resolution."
        )

    j = numpy.arange(n + 1)
    # Symmetric form keeps nodes[n - j] = 1 - nodes[j] exactly.
    nodes = 0.5 - 0.5 * numpy.sin(numpy.pi * (n - 2 * j) / (2 * n))
    nodes[0], nodes[n] = 0.0, 1.0

    weights = (-1.0) ** j
    weights[0] *= 0.5
    weights[n] *= 0.5
    ratios = weights[None, :] / weights[:, None]

    differences = _node_differences(n)
    numpy.fill_diagonal(differences, 1.0)

    d1 = _with_negative_sum_diagonal(ratios / differences)
    d2 = _with_negative_sum_diagonal(
        2.0 * (ratios * numpy.diag(d1)[:, None] - d1) / differences
    )

    return _types.CollocationGrid(n=int(n), nodes=nodes, d1=d1, d2=d2)


def apply_derivative(
    grid: "_types.CollocationGrid",
    order: int,
    field: numpy.ndarray,
) -> numpy.ndarray:
    """Apply the smooth spectral derivative of the given order to nodal values."""
    field = numpy.asarray(field)
    if field.shape != (grid.size,):
        raise _errors.ValidationError(
            f"Field of shape {field.shape} does not match a grid of {grid.size} nodes."
        )
    if order not in (1, 2):
        raise _errors.ValidationError(f"Derivative order must be 1 or 2, not {order}.")
    return grid.derivative_matrix(order) @ field
