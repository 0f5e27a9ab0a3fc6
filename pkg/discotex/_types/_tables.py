import dataclasses
import typing

from discotex import _errors
from discotex._types._jets import TrigPair


@dataclasses.dataclass(frozen=True)
class TimeJumpTable:
    """
    Jumps of tau derivatives of the field across the particle, as harmonic pairs.

    Every entry is a function of the particle proper phase tau_c only. ``field[d]``
    is the jump of d^(d+1) Psi / d tau^(d+1), consumed by the Psi rows of an
    order-2s step for d < 2s. ``operator[d]`` is the jump consumed by the Pi rows.
    """

    source: str
    field: typing.Tuple[TrigPair, ...]
    operator: typing.Tuple[TrigPair, ...]

    @property
    def depth(self) -> int:
        """Number of entries available to both row families."""
        return min(len(self.field), len(self.operator))

    def require(self, order: int) -> "TimeJumpTable":
        """Ensure an order-2s step can draw its 2s entries from this table."""
        if order > self.depth:
            raise _errors.ValidationError(
                f"Order {order} needs {order} time jumps; the {self.source} "
                f"table holds {self.depth}."
            )
        return self

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        """Convert to a dictionary representation that is JSON serializable for logs."""
        return {
            "source": self.source,
            "field": [p.to_dict() for p in self.field],
            "operator": [p.to_dict() for p in self.operator],
        }
