import dataclasses
import typing

import numpy


@dataclasses.dataclass(frozen=True, eq=False)
class State:
    """Field vector U = (Psi, Pi) on the grid at one time slice."""

    tau: float
    u: numpy.ndarray

    @property
    def size(self) -> int:
        """Number of collocation nodes the state spans."""
        return self.u.size // 2

    @property
    def psi(self) -> numpy.ndarray:
        """Field values at the nodes."""
        return self.u[: self.size]

    @property
    def pi(self) -> numpy.ndarray:
        """Time derivative field values at the nodes."""
        return self.u[self.size :]

    @property
    def is_finite(self) -> bool:
        """Whether every entry is free of NaN and Inf."""
        return bool(numpy.all(numpy.isfinite(self.u)))


@dataclasses.dataclass(frozen=True, eq=False)
class StepOperators:
    """
    Time-independent matrices of an order-2s DiscoTEX step.

    ``hfh`` is the LU factorization of Q(A) = I - c0 A + c1 A^2 - ..., applied once per
    step, and ``tex`` is the even polynomial with P(A) - Q(A) = A TEX(A).
    """

    order: int
    dt: float
    l_matrix: numpy.ndarray
    a: numpy.ndarray
    tex: numpy.ndarray
    q: numpy.ndarray
    hfh: typing.Tuple[numpy.ndarray, numpy.ndarray]
    condition: float

    @property
    def s(self) -> int:
        """Derivative levels consumed per endpoint."""
        return self.order // 2


@dataclasses.dataclass(frozen=True, eq=False)
class SourceStack:
    """Distributional source vectors s, s^(1), ..., s^(s-1) at one instant."""

    tau: float
    vectors: typing.Tuple[numpy.ndarray, ...]

    def __getitem__(self, level: int) -> numpy.ndarray:
        return self.vectors[level]

    def __len__(self) -> int:
        return len(self.vectors)


@dataclasses.dataclass(frozen=True)
class Crossing:
    """Passage of the particle over a collocation node within a step."""

    node: int
    tau: float
    dt_cross: float
    #: +1 when the node moves from the left to the right of the particle, so that
    #: time jumps equal spatial jumps; -1 for the opposite passage.
    direction: int

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        """Convert to a dictionary representation that is JSON serializable for logs."""
        return dataclasses.asdict(self)
