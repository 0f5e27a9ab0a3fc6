import dataclasses
import functools
import typing

import numpy

from discotex import _collocation
from discotex import _configs
from discotex import _errors
from discotex import _spectral
from discotex import _types
from discotex._model import _chart
from discotex._model import _coefficients
from discotex._model import _exact
from discotex._model import _tables

#: Extra jet length beyond the jump truncation taken by the Pi series and its
#: derivative.
_PI_MARGIN = 2

#: Time derivative levels of g carried by default, enough for every rule.
DEFAULT_LEVELS = _configs.MAX_G_DERIVATIVE + 1


def build_system_matrix(
    grid: "_types.CollocationGrid",
    coeffs: "_coefficients.OperatorCoefficients",
) -> numpy.ndarray:
    """
    Evolution operator L of the first-order system U_tau = L U with U = (Psi, Pi).

    The block structure is [[0, I], [L1, L2]] where L1 = -(chi~ D2 + iota~ D1 + V~)
    and L2 = -(eps~ D1 + varrho~ I), each coefficient scaling its row.
    """
    size = grid.size
    rows = coeffs.evolution_rows(grid.nodes)
    l1 = (
        rows["c_ss"][:, None] * grid.d2
        + rows["c_s"][:, None] * grid.d1
        + numpy.diag(rows["c_v"])
    )
    l2 = rows["c_pi_s"][:, None] * grid.d1 + numpy.diag(rows["c_pi"])

    matrix = numpy.zeros((2 * size, 2 * size), dtype=complex)
    matrix[:size, size:] = numpy.eye(size)
    matrix[size:, :size] = l1
    matrix[size:, size:] = l2
    return matrix


def assemble_jump_data(
    traj: "_chart.Trajectory",
    coeffs: "_coefficients.OperatorCoefficients",
    tau: float,
    m_max: int,
    levels: int = DEFAULT_LEVELS,
) -> typing.Tuple["_types.JumpSeries", "_types.JumpSeries"]:
    """
    Psi and Pi jump series about tau, seeded from the exact J_0 and J_1.

    The Psi series is generated one index beyond M so that the Pi series derived
    from it through JJ_m = d/dtau J_m - xi_dot J_(m+1) also reaches m = M. Jets
    keep just enough coefficients for g^(0..levels-1), so lower orders carry
    shorter jets.
    """
    length = m_max + _PI_MARGIN + levels
    j0, j1 = _exact.seed_jumps(traj, tau, length)
    extended = _collocation.jump_recurrence(j0, j1, coeffs, traj, tau, m_max + 1)
    pi_series = _collocation.pi_series_from(extended, traj)
    psi_series = _types.JumpSeries(tau, extended.entries[: m_max + 1])
    return psi_series, pi_series


@dataclasses.dataclass(frozen=True, eq=False)
class WaveModel:
    """Everything an evolution needs besides the state: grid, operator and particle."""

    grid: "_types.CollocationGrid"
    coefficients: "_coefficients.OperatorCoefficients"
    trajectory: "_chart.Trajectory"
    table: "_types.TimeJumpTable"
    m_max: int
    levels: int = DEFAULT_LEVELS

    @classmethod
    def build(
        cls,
        nodes: int,
        jumps: int,
        velocity: "_chart.Velocity",
        printed_jumps: bool = False,
        depth: int = 12,
        levels: int = DEFAULT_LEVELS,
    ) -> "WaveModel":
        """Assemble the flat wave model for a particle boosted with the given speed."""
        if printed_jumps and velocity != _configs.PRINTED_TABLE_VELOCITY:
            raise _errors.ValidationError(
                f"The printed time-jump tables hold for v = 1/4 only, not {velocity}."
            )
        return cls(
            grid=_spectral.build_grid(nodes),
            coefficients=_coefficients.flat_wave_coefficients(),
            trajectory=_chart.BoostedTrajectory(velocity),
            table=(
                _tables.printed_time_jumps()
                if printed_jumps
                else _tables.exact_time_jumps(velocity, depth)
            ),
            m_max=jumps,
            levels=levels,
        )

    @functools.cached_property
    def system_matrix(self) -> numpy.ndarray:
        """Evolution operator L on this grid."""
        return build_system_matrix(self.grid, self.coefficients)

    @functools.cached_property
    def rows(self) -> typing.Dict[str, numpy.ndarray]:
        """Nodal factors of the Pi evolution equation."""
        return self.coefficients.evolution_rows(self.grid.nodes)

    def jump_data(
        self, tau: float
    ) -> typing.Tuple["_types.JumpSeries", "_types.JumpSeries"]:
        """Psi and Pi jump series about tau."""
        return assemble_jump_data(
            self.trajectory, self.coefficients, tau, self.m_max, self.levels
        )

    def exact_state(self, tau: float) -> "_types.State":
        """Exact solution sampled on the grid."""
        return _exact.exact_state(self.grid, self.trajectory, tau)
