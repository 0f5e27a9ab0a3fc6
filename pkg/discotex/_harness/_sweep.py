import concurrent.futures
import typing

from discotex import _stepper
from discotex import _types
from discotex._harness import _output
from discotex._harness import _quad

_CASTS: typing.Dict[str, typing.Callable[[float], typing.Any]] = {
    "nodes": int,
    "jumps": int,
    "dt": float,
}


def _cell(
    config: "_types.RunConfig",
    factor: str,
    value: float,
    order: int,
) -> "_types.SweepRow":
    cell_config = config.with_changes(
        command="evolve", order=order, **{factor: _CASTS[factor](value)}
    ).validate()
    result = _stepper.evolve(cell_config)
    return _types.SweepRow(
        factor=factor,
        value=value,
        order=order,
        eta_final=result.final_eta,
        wall_seconds=result.wall_seconds,
    )


def sweep_rows(
    config: "_types.RunConfig",
    evaluate: typing.Callable[..., "_types.SweepRow"] = _cell,
) -> typing.List["_types.SweepRow"]:
    """
    Evolve every (value, order) cell of a control-factor sweep.

    Cells run on up to ``config.threads`` workers and are returned sorted by order
    and then value, independent of completion order.
    """
    cells = [(value, order) for order in config.orders for value in config.values]
    with concurrent.futures.ThreadPoolExecutor(max_workers=config.threads) as pool:
        futures = [
            pool.submit(evaluate, config, config.factor, value, order)
            for value, order in cells
        ]
        rows = [f.result() for f in futures]
    return sorted(rows, key=lambda r: (r.order, r.value))


def sweep_slopes(
    rows: typing.Sequence["_types.SweepRow"],
) -> typing.Dict[int, typing.Optional[float]]:
    """Fitted log-log slope of the final error against dt, per order."""
    return {
        order: _quad.fit_slope(
            [r.value for r in rows if r.order == order],
            [r.eta_final for r in rows if r.order == order],
        )
        for order in sorted({r.order for r in rows})
    }


def run_sweep(config: "_types.RunConfig") -> typing.Dict[str, typing.Any]:
    """Sweep one control factor across the configured orders."""
    rows = sweep_rows(config)
    _output.write_table(
        config,
        f"sweep_{config.factor}.dat",
        f"Convergence sweep over {config.factor}",
        (config.factor, "order", "eta_final", "wall_seconds"),
        ((r.value, r.order, r.eta_final, r.wall_seconds) for r in rows),
    )

    summary: typing.Dict[str, typing.Any] = {"rows": [r.to_dict() for r in rows]}
    if config.factor == "dt":
        slopes = sweep_slopes(rows)
        summary["slopes"] = slopes
        _output.write_table(
            config,
            "sweep_dt_slopes.dat",
            "Convergence slopes against dt",
            ("order", "slope"),
            ((o, "nan" if s is None else s) for o, s in slopes.items()),
        )
    return summary
