import collections
import time
import typing

import numpy

from discotex import _collocation
from discotex import _errors
from discotex import _hermite
from discotex import _model
from discotex import _types
from discotex._stepper import _operators
from discotex._stepper import _sources


def source_bracket(
    ops: "_types.StepOperators",
    sources_n: "_types.SourceStack",
    sources_n1: "_types.SourceStack",
) -> numpy.ndarray:
    """
    Source contribution of one step to the right-hand side:

        sum_d c_d sum_(j<=d) A^(d-j) dt^(j+1) (S_n^(j) + (-1)^d S_n+1^(j)).

    Follows from substituting U^(d+1) = L^(d+1) U + sum_j L^(d-j) S^(j) into the
    endpoint derivatives of the Hermite rule.
    """
    rule = _hermite.get_rule(ops.order)
    if len(sources_n) < rule.s or len(sources_n1) < rule.s:
        raise _errors.ValidationError(
            f"Order {ops.order} needs {rule.s} source levels at each end of the step."
        )
    total = numpy.zeros_like(sources_n[0])
    for d, c in enumerate(rule.weights):
        sign = (-1) ** d
        accumulated = ops.dt * (sources_n[0] + sign * sources_n1[0])
        for j in range(1, d + 1):
            accumulated = ops.a @ accumulated + ops.dt ** (j + 1) * (
                sources_n[j] + sign * sources_n1[j]
            )
        total = total + float(c) * accumulated
    return total


def _sources_at(
    model: typing.Any,
    tau: float,
    order: int,
    cache: typing.Dict[float, "_types.SourceStack"],
    diagnostics: typing.Counter[str],
) -> "_types.SourceStack":
    if tau not in cache:
        xi = model.trajectory.position(tau)
        if _collocation.particle_on_node(model.grid, xi) is not None:
            diagnostics["node_hits"] += 1
        cache[tau] = _sources.assemble_sources(model, tau, order)
    return cache[tau]


def step(
    state: "_types.State",
    ops: "_types.StepOperators",
    model: typing.Any,
    cache: typing.Dict[float, "_types.SourceStack"] = None,
    tau_next: float = None,
    diagnostics: typing.Counter[str] = None,
) -> "_types.State":
    """
    Advance the state by one DiscoTEX step.

    U_n+1 = U_n + Q(A)^-1 [A TEX(A) U_n + R_s + Upsilon + J_H], where R_s is the
    source bracket, Upsilon the jump of the state at nodes crossed during the step
    and J_H the Hermite corrections for the jumps of the integrand derivatives.

    :param state:
        State at tau_n.
    :param ops:
        Step operators matching the model's evolution operator.
    :param model:
        Wave model supplying grid, trajectory, jump data and time-jump table.
    :param cache:
        Source stacks by time, reused between consecutive steps.
    :param tau_next:
        End of the step; defaults to tau_n + dt.
    :param diagnostics:
        Counter receiving crossing and particle-on-node tallies.
    """
    model.table.require(ops.order)
    cache = {} if cache is None else cache
    diagnostics = collections.Counter() if diagnostics is None else diagnostics
    tau_n = state.tau
    tau_n1 = tau_n + ops.dt if tau_next is None else tau_next

    sources_n = _sources_at(model, tau_n, ops.order, cache, diagnostics)
    sources_n1 = _sources_at(model, tau_n1, ops.order, cache, diagnostics)

    crossings = _sources.detect_crossings(model.trajectory, model.grid, tau_n, tau_n1)
    diagnostics["crossings"] += len(crossings)
    instant = sum(1 for c in crossings if c.dt_cross == 0)
    diagnostics["node_instant_crossings"] += instant

    size = model.grid.size
    rhs = ops.a @ (ops.tex @ state.u) + source_bracket(ops, sources_n, sources_n1)
    if crossings:
        pairs = [model.jump_data(c.tau) for c in crossings]
        rhs = rhs + _sources.upsilon_correction(size, crossings, pairs)
        rhs = rhs + _sources.time_jump_correction(
            ops.order, crossings, model.table, model.trajectory, ops.dt, size
        )

    result = _types.State(tau=tau_n1, u=state.u + _operators.solve_implicit(ops, rhs))
    if not result.is_finite:
        raise _errors.NumericalError(
            f"Non-finite field values after the step to tau={tau_n1}."
        )
    return result


def _nearest_index(taus: numpy.ndarray, target: typing.Optional[float]) -> int:
    if target is None:
        return len(taus) - 1
    return int(numpy.argmin(numpy.abs(taus - target)))


def evolve(
    config: "_types.RunConfig",
    model: typing.Any = None,
) -> "_types.EvolutionResult":
    """
    Evolve exact initial data over the configured window and measure the error.

    Records Psi and Pi at the last grid point (sigma = 1) after every step, a field
    snapshot nearest to the requested time, and the relative error
    eta = |1 - Psi_numerical / Psi_exact| at sigma = 1. Wall time covers the stepping
    loop only, not the operator factorization.
    """
    config.validate()
    levels = _hermite.get_rule(config.order).s
    model = model or _model.WaveModel.build(
        config.nodes,
        config.jumps,
        config.velocity,
        printed_jumps=config.printed_jumps,
        levels=levels,
    )
    if model.levels < levels:
        raise _errors.ValidationError(
            f"Order {config.order} needs {levels} source levels,"
            f" the model carries {model.levels}."
        )
    ops = _operators.build_step_operators(model.system_matrix, config.dt, config.order)
    model.table.require(config.order)

    taus = config.tau_start + config.dt * numpy.arange(config.step_count + 1)
    snapshot_index = _nearest_index(taus, config.snapshot_tau)

    state = model.exact_state(taus[0])
    last = model.grid.n
    psi = numpy.zeros(taus.size, dtype=complex)
    pi = numpy.zeros(taus.size, dtype=complex)
    psi[0], pi[0] = state.psi[last], state.pi[last]
    snapshot = state

    diagnostics: typing.Counter[str] = collections.Counter()
    cache: typing.Dict[float, "_types.SourceStack"] = {}
    started = time.perf_counter()
    for k in range(1, taus.size):
        state = step(
            state, ops, model, cache, tau_next=taus[k], diagnostics=diagnostics
        )
        cache = {taus[k]: cache[taus[k]]}
        psi[k], pi[k] = state.psi[last], state.pi[last]
        if k == snapshot_index:
            snapshot = state
    wall_seconds = time.perf_counter() - started

    exact = numpy.array(
        [_model.exact_values(model.trajectory, tau, 1.0)[0][0] for tau in taus]
    )
    eta = numpy.abs(1.0 - psi / exact)

    return _types.EvolutionResult(
        config=config,
        taus=taus,
        psi_waveform=psi,
        pi_waveform=pi,
        eta=eta,
        snapshot_tau=float(snapshot.tau),
        snapshot_nodes=model.grid.nodes.copy(),
        snapshot_psi=snapshot.psi.copy(),
        snapshot_pi=snapshot.pi.copy(),
        wall_seconds=wall_seconds,
        diagnostics={
            "crossings": diagnostics["crossings"],
            "node_instant_crossings": diagnostics["node_instant_crossings"],
            "particle_on_node": diagnostics["node_hits"],
            "condition_number": ops.condition,
        },
    )
