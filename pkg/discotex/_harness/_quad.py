import time
import typing

import numpy

from discotex import _configs
from discotex import _hermite
from discotex import _types
from discotex._harness import _output

#: Errors below this floor are round-off and are left out of slope fits.
SLOPE_FLOOR = 1e-13


def fit_slope(
    steps: typing.Sequence[float],
    errors: typing.Sequence[float],
    floor: float = SLOPE_FLOOR,
) -> typing.Optional[float]:
    """
    Log-log slope of the error against the step size.

    Points at or below the round-off floor are dropped; fewer than two remaining
    points give no slope.
    """
    points = [(s, e) for s, e in zip(steps, errors) if e > floor]
    if len(points) < 2:
        return None
    x = numpy.log([p[0] for p in points])
    y = numpy.log([p[1] for p in points])
    return float(numpy.polyfit(x, y, 1)[0])


def slope_floor(config: "_types.RunConfig") -> float:
    """Error floor of the benchmark precision the configuration selects."""
    return _configs.PRECISE_SLOPE_FLOOR if config.precise else SLOPE_FLOOR


def _interval_length() -> float:
    start, end = _configs.LEGENDRE_INTERVAL
    return end - start


def quad_rows(config: "_types.RunConfig") -> typing.List["_types.QuadRow"]:
    """Legendre benchmark rows for every configured order and step count."""
    benchmark = (
        _hermite.legendre_benchmark_precise
        if config.precise
        else _hermite.legendre_benchmark
    )
    variants = [("discontinuous", False)]
    if config.smooth:
        variants.append(("smooth", True))

    rows = []
    for variant, smooth_only in variants:
        for order in config.orders:
            for steps in config.steps:
                started = time.perf_counter()
                value, error = benchmark(order, steps, smooth_only=smooth_only)
                rows.append(
                    _types.QuadRow(
                        variant=variant,
                        order=order,
                        steps=steps,
                        dt=_interval_length() / steps,
                        value=value,
                        abs_error=error,
                        wall_seconds=time.perf_counter() - started,
                    )
                )
    return rows


def quad_slopes(
    rows: typing.Sequence["_types.QuadRow"],
    floor: float = SLOPE_FLOOR,
) -> typing.Dict[str, typing.Dict[int, typing.Optional[float]]]:
    """Convergence slope per variant and order."""
    slopes: typing.Dict[str, typing.Dict[int, typing.Optional[float]]] = {}
    for variant in sorted({r.variant for r in rows}):
        for order in sorted({r.order for r in rows if r.variant == variant}):
            selected = [r for r in rows if r.variant == variant and r.order == order]
            slopes.setdefault(variant, {})[order] = fit_slope(
                [r.dt for r in selected], [r.abs_error for r in selected], floor
            )
    return slopes


def run_quad(config: "_types.RunConfig") -> typing.Dict[str, typing.Any]:
    """Run the discontinuous quadrature benchmark and write its tables."""
    rows = quad_rows(config)
    slopes = quad_slopes(rows, slope_floor(config))

    _output.write_table(
        config,
        "quad.dat",
        "Legendre P5/Q5 benchmark",
        ("variant", "order", "steps", "dt", "value", "abs_error", "wall_seconds"),
        (
            (r.variant, r.order, r.steps, r.dt, r.value, r.abs_error, r.wall_seconds)
            for r in rows
        ),
    )
    _output.write_table(
        config,
        "quad_slopes.dat",
        "Legendre benchmark convergence slopes",
        ("variant", "order", "slope"),
        (
            (variant, order, "nan" if slope is None else slope)
            for variant, by_order in slopes.items()
            for order, slope in by_order.items()
        ),
    )
    return {"rows": [r.to_dict() for r in rows], "slopes": slopes}
