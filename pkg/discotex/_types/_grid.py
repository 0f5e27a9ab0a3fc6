import dataclasses

import numpy

from discotex import _errors


@dataclasses.dataclass(frozen=True, eq=False)
class CollocationGrid:
    """Chebyshev-Gauss-Lobatto nodes on [0, 1] with dense differentiation matrices."""

    #: Node-index maximum; the grid holds n + 1 nodes.
    n: int
    #: Ascending node coordinates with nodes[0] = 0 and nodes[n] = 1.
    nodes: numpy.ndarray
    #: First-derivative operator, (n + 1) x (n + 1).
    d1: numpy.ndarray
    #: Second-derivative operator, (n + 1) x (n + 1).
    d2: numpy.ndarray

    @property
    def size(self) -> int:
        """Number of collocation nodes."""
        return self.n + 1

    def derivative_matrix(self, order: int) -> numpy.ndarray:
        """Differentiation matrix of the given order (1 or 2)."""
        if order == 1:
            return self.d1
        if order == 2:
            return self.d2
        raise _errors.ValidationError(
            f"Unsupported derivative order {order}; expected 1 or 2."
        )
