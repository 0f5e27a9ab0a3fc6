import math
import typing

import numpy

from discotex import _configs
from discotex import _errors
from discotex import _types

#: Jump data accepted by the recurrence: a jet in tau or a harmonic pair in tau_c.
JumpLike = typing.Union["_types.Jet", "_types.TrigPair"]

#: Threshold below which gamma-bar^-2 is treated as vanishing.
SINGULAR_TOLERANCE = 1e-14


def heaviside(z: typing.Any) -> typing.Any:
    """Heaviside step with the half-maximum convention Theta(0) = 1/2."""
    z = numpy.asarray(z, dtype=float)
    return numpy.where(z > 0, 1.0, numpy.where(z < 0, 0.0, 0.5))


def particle_on_node(grid: "_types.CollocationGrid", xi: float) -> typing.Optional[int]:
    """Index of the node coinciding with the particle, if any."""
    hits = numpy.flatnonzero(grid.nodes == xi)
    return int(hits[0]) if hits.size else None


def _check_inside(xi: float):
    if not 0.0 < xi < 1.0:
        raise _errors.ValidationError(
            f"The particle must lie strictly inside (0, 1), not at {xi}."
        )


def _as_jet(value: JumpLike, traj: typing.Any, tau: float, length: int) -> "_types.Jet":
    if isinstance(value, _types.TrigPair):
        return value.to_jet(traj.phase_jet(tau, length))
    return value


def jump_recurrence(
    j0: JumpLike,
    j1: JumpLike,
    coeffs: typing.Any,
    traj: typing.Any,
    tau: float,
    m_max: int,
    length: int = None,
) -> "_types.JumpSeries":
    """
    Generate the spatial jumps J_2..J_M from J_0 and J_1.

    Differentiating the field equation m times in sigma and taking the jump across
    the moving particle expresses J_(m+2) through lower jumps and their total time
    derivatives. All quantities are jets in tau about ``tau``; J_m keeps
    ``length - m`` coefficients since each step consumes two time derivatives of
    jumps that already lost m - 2.

    :param j0:
        Jump of Psi, as a jet or a harmonic pair in the trajectory phase.
    :param j1:
        Jump of d Psi / d sigma.
    :param coeffs:
        Operator coefficients with sigma-derivative polynomials.
    :param traj:
        Particle trajectory supplying the xi_p jet.
    :param tau:
        Expansion instant.
    :param m_max:
        Highest jump index M.
    :param length:
        Jet length for harmonic-pair inputs. Defaults to M + 8.
    """
    if m_max < 0:
        raise _errors.ValidationError(f"The jump truncation must be >= 0, not {m_max}.")
    length = length or (
        j0.length if isinstance(j0, _types.Jet) else m_max + 8
    )
    jumps = [_as_jet(j0, traj, tau, length), _as_jet(j1, traj, tau, length)]
    length = min(jumps[0].length, jumps[1].length)
    if length < m_max + 1:
        raise _errors.ValidationError(
            f"Jets of length {length} cannot carry {m_max + 1} jumps."
        )
    if m_max < 2:
        return _types.JumpSeries(tau, tuple(jumps[: m_max + 1]))

    position = traj.position_jet(tau, length + 2)
    xi_dot = position.derivative()
    xi_ddot = xi_dot.derivative()

    cache: typing.Dict[typing.Tuple[str, int], "_types.Jet"] = {}

    def coefficient(name: str, k: int) -> "_types.Jet":
        if (name, k) not in cache:
            cache[(name, k)] = position.compose_polynomial(coeffs.derivative(name, k))
        return cache[(name, k)]

    inverse = (
        xi_dot * xi_dot * coefficient("gamma", 0)
        - xi_dot * coefficient("epsilon", 0)
        + coefficient("chi", 0)
    )
    if abs(inverse.value) <= SINGULAR_TOLERANCE:
        raise _errors.NumericalError(
            f"Singular jump recurrence: gamma-bar^-2 = {inverse.value:.3e} "
            f"vanishes, so J_2 cannot be formed at tau={tau}."
        )

    for m in range(m_max - 1):
        total: typing.Any = 0.0
        for k in range(m + 1):
            lower, upper = jumps[m - k], jumps[m - k + 1]
            term = (
                coefficient("gamma", k)
                * (
                    lower.derivative(2)
                    - xi_ddot * upper
                    - 2.0 * xi_dot * upper.derivative()
                )
                + coefficient("epsilon", k) * upper.derivative()
                + coefficient("varrho", k) * (lower.derivative() - xi_dot * upper)
                + coefficient("iota", k) * upper
                + coefficient("potential", k) * lower
            )
            total = term * math.comb(m, k) + total
        for k in range(1, m + 1):
            characteristic = (
                xi_dot * xi_dot * coefficient("gamma", k)
                - xi_dot * coefficient("epsilon", k)
                + coefficient("chi", k)
            )
            total = characteristic * jumps[m + 2 - k] * math.comb(m, k) + total
        jumps.append(-total / inverse)

    return _types.JumpSeries(tau, tuple(jumps))


def pi_series_from(
    psi_series: "_types.JumpSeries",
    traj: typing.Any,
) -> "_types.JumpSeries":
    """
    Jumps of the sigma derivatives of Pi from those of Psi.

    The time derivative along the worldline relates them through
    JJ_m = d/dtau J_m - xi_dot J_(m+1), so the result holds M entries.
    """
    entries = psi_series.entries
    if len(entries) < 2:
        raise _errors.ValidationError("Deriving Pi jumps needs at least J_0 and J_1.")
    xi_dot = traj.position_jet(psi_series.tau, entries[0].length + 1).derivative()
    return _types.JumpSeries(
        psi_series.tau,
        tuple(
            entries[m].derivative() - xi_dot * entries[m + 1]
            for m in range(len(entries) - 1)
        ),
    )


def mixed_jumps(
    series: "_types.JumpSeries",
    traj: typing.Any,
    a_max: int,
) -> typing.List[typing.Tuple["_types.Jet", ...]]:
    """
    Jumps K[a][m] of d^a/dtau^a d^m/dsigma^m Psi for a = 0..a_max.

    Built by repeated application of K[a+1][m] = d/dtau K[a][m] - xi_dot K[a][m+1];
    level a holds M + 1 - a entries.
    """
    if a_max >= len(series.entries):
        raise _errors.ValidationError(
            f"Time level {a_max} needs at least {a_max + 1} spatial jumps."
        )
    levels = [series.entries]
    xi_dot = traj.position_jet(series.tau, series.entries[0].length + 1).derivative()
    for _ in range(a_max):
        current = levels[-1]
        levels.append(
            tuple(
                current[m].derivative() - xi_dot * current[m + 1]
                for m in range(len(current) - 1)
            )
        )
    return levels


def operator_time_jump(
    series: "_types.JumpSeries",
    traj: typing.Any,
    coeffs: typing.Any,
    d: int,
    m: int = 0,
) -> complex:
    """
    Jump of d^m/dsigma^m d^d/dtau^d of the Pi-row operator at the particle.

    The operator -(chi~ Psi'' + iota~ Psi' + V~ Psi + eps~ Pi' + varrho~ Pi) has
    sigma-dependent coefficients, so each term expands as a binomial sum of tilde
    derivatives at xi_p times mixed jumps of Psi.
    """
    levels = mixed_jumps(series, traj, d + 1)
    xi = traj.position(series.tau)

    def jump(a: int, index: int) -> complex:
        return levels[a][index].value

    total = 0j
    for k in range(m + 1):
        binomial = math.comb(m, k)
        total += binomial * (
            coeffs.tilde("chi", xi, k) * jump(d, m - k + 2)
            + coeffs.tilde("iota", xi, k) * jump(d, m - k + 1)
            + coeffs.tilde("potential", xi, k) * jump(d, m - k)
            + coeffs.tilde("epsilon", xi, k) * jump(d + 1, m - k + 1)
            + coeffs.tilde("varrho", xi, k) * jump(d + 1, m - k)
        )
    return -total


def g_value(series: "_types.JumpSeries", w: float) -> complex:
    """Truncated jump expansion sum_m J_m / m! w^m at displacement w."""
    if abs(w) > 1.0:
        raise _errors.ValidationError(f"Displacement {w} lies outside [-1, 1].")
    values = series.values()
    factorials = numpy.array([math.factorial(m) for m in range(values.size)], float)
    return complex(numpy.polynomial.polynomial.polyval(w, values / factorials))


def _g_jet(
    series: "_types.JumpSeries",
    xi_jet: "_types.Jet",
    sigma: float,
) -> "_types.Jet":
    displacement = sigma - xi_jet
    entries = series.entries
    result = entries[-1] / math.factorial(len(entries) - 1)
    for m in range(len(entries) - 2, -1, -1):
        result = result * displacement + entries[m] / math.factorial(m)
    return result


def g_jet(
    series: "_types.JumpSeries",
    traj: typing.Any,
    sigma: float,
) -> "_types.Jet":
    """Jet in tau of g(sigma - xi_p(tau)) at a fixed node coordinate."""
    xi_jet = traj.position_jet(series.tau, series.entries[0].length)
    return _g_jet(series, xi_jet, sigma)


def g_time_derivative(
    series: "_types.JumpSeries",
    traj: typing.Any,
    w: float,
    k: int,
) -> complex:
    """
    k-th total time derivative of g at displacement w from the particle.

    Both the jumps J_m(tau) and the displacement sigma_j - xi_p(tau) vary, and the
    Taylor products of their jets carry every product and chain rule term.
    """
    if not 1 <= k <= _configs.MAX_G_DERIVATIVE:
        raise _errors.ValidationError(
            f"Time derivative order must be in 1..{_configs.MAX_G_DERIVATIVE}, not {k}."
        )
    sigma = w + traj.position(series.tau)
    return g_jet(series, traj, sigma).derivative_value(k)


def sigma_derivative(series: "_types.JumpSeries", times: int) -> "_types.JumpSeries":
    """
    Jump series of the ``times``-th sigma derivative of g.

    Differentiating sum_m J_m w^m / m! in w shifts every jump down by one index, and
    the shift commutes with total time derivatives taken at a fixed node.
    """
    if times < 0:
        raise _errors.ValidationError(
            f"Derivative order must not be negative, got {times}."
        )
    return _types.JumpSeries(series.tau, series.entries[times:])


def near_side(grid: "_types.CollocationGrid", xi: float) -> numpy.ndarray:
    """
    Mask of the nodes on the shorter side of the particle.

    The truncated expansion of g stays bounded there. A node under the particle
    belongs to both sides.
    """
    theta = heaviside(grid.nodes - xi)
    if xi >= 0.5:
        return theta > 0
    return theta < 1


def g_levels(
    grid: "_types.CollocationGrid",
    series: "_types.JumpSeries",
    traj: typing.Any,
    levels: int,
    mask: numpy.ndarray = None,
) -> numpy.ndarray:
    """
    Nodal g^(0..levels-1), shaped (levels, n + 1).

    Nodes outside ``mask`` are left at zero.
    """
    result = numpy.zeros((levels, grid.size), dtype=complex)
    if not series.entries:
        return result
    selected = numpy.ones(grid.size, bool) if mask is None else mask
    xi_jet = traj.position_jet(series.tau, series.entries[0].length)
    for i in numpy.flatnonzero(selected):
        result[:, i] = _g_jet(series, xi_jet, grid.nodes[i]).derivatives(levels)
    return result


def _nodal_g(
    grid: "_types.CollocationGrid",
    series: "_types.JumpSeries",
    xi: float,
    levels: int,
    traj: typing.Any,
    mask: numpy.ndarray = None,
) -> numpy.ndarray:
    if traj is not None:
        return g_levels(grid, series, traj, levels, mask)
    result = numpy.zeros((1, grid.size), dtype=complex)
    if not series.entries:
        return result
    selected = numpy.ones(grid.size, bool) if mask is None else mask
    for i in numpy.flatnonzero(selected):
        result[0, i] = g_value(series, grid.nodes[i] - xi)
    return result


def delta_correction(
    grid: "_types.CollocationGrid",
    series: "_types.JumpSeries",
    xi: float,
    i: int,
    j: int,
    time_deriv: int = 0,
    traj: typing.Any = None,
) -> complex:
    """
    Correction for the node pair (i, j):

        Delta_ij = [Theta(sigma_i - xi) - Theta(sigma_j - xi)] g^(k)(sigma_j - xi).

    It vanishes when both nodes sit on the same side of the particle. A particle on a
    node takes the half weight of Theta(0) = 1/2.
    """
    _check_inside(xi)
    step = heaviside(grid.nodes[i] - xi) - heaviside(grid.nodes[j] - xi)
    if step == 0:
        return 0j
    if time_deriv == 0:
        return complex(step) * g_value(series, grid.nodes[j] - xi)
    if traj is None:
        raise _errors.ValidationError("Time derivatives of g need the trajectory.")
    return complex(step) * g_jet(series, traj, grid.nodes[j]).derivative_value(
        time_deriv
    )


def source_levels(
    grid: "_types.CollocationGrid",
    coeff_row: numpy.ndarray,
    deriv_order: int,
    series: "_types.JumpSeries",
    xi: float,
    levels: int = 1,
    traj: typing.Any = None,
) -> numpy.ndarray:
    """
    Distributional corrections coeff_i sum_j D_ij Delta_ij^(k) for k < ``levels``.

    The truncated g is a polynomial in sigma of degree M, so whenever M <= n the
    spectral derivative reproduces it exactly and the far-side columns follow from

        sum_(j far) D_ij g_j = d^p g / dsigma^p (sigma_i - xi) - sum_(j near) D_ij g_j.

    Only near-side evaluations of g then enter the result, where the expansion
    stays inside its convergence radius.
    Longer series fall back to the direct double sum.

    :param grid:
        Collocation grid supplying the differentiation matrix.
    :param coeff_row:
        Nodal factor of the corrected derivative term.
    :param deriv_order:
        1 or 2, the derivative being corrected.
    :param series:
        Jump series of the differentiated field.
    :param xi:
        Particle coordinate.
    :param levels:
        Number of time derivative levels, starting at g itself.
    :param traj:
        Trajectory, needed for levels beyond the first.
    :return:
        Array shaped (levels, n + 1).
    """
    _check_inside(xi)
    coeff_row = numpy.asarray(coeff_row)
    if coeff_row.shape != (grid.size,):
        raise _errors.ValidationError(
            f"Coefficient row of shape {coeff_row.shape}"
            f" does not fit {grid.size} nodes."
        )
    if levels > 1 and traj is None:
        raise _errors.ValidationError("Time derivatives of g need the trajectory.")

    matrix = grid.derivative_matrix(deriv_order)
    theta = heaviside(grid.nodes - xi)
    if series.m_max > grid.n:
        g = _nodal_g(grid, series, xi, levels, traj)
        return coeff_row * (theta * (g @ matrix.T) - (theta * g) @ matrix.T)

    near = near_side(grid, xi)
    theta_far = 0.0 if xi >= 0.5 else 1.0
    g = _nodal_g(grid, series, xi, levels, traj, near)
    gradient = _nodal_g(
        grid, sigma_derivative(series, deriv_order), xi, levels, traj, near
    )
    inner = g @ matrix.T
    local = theta * inner - (theta * g) @ matrix.T
    return coeff_row * (local + (theta - theta_far) * (gradient - inner))


def source_vector(
    grid: "_types.CollocationGrid",
    coeff_row: numpy.ndarray,
    deriv_order: int,
    series: "_types.JumpSeries",
    xi: float,
    time_deriv: int = 0,
    traj: typing.Any = None,
) -> numpy.ndarray:
    """Distributional correction coeff_i sum_j D_ij Delta_ij at every node."""
    levels = source_levels(
        grid, coeff_row, deriv_order, series, xi, time_deriv + 1, traj
    )
    return levels[time_deriv]
