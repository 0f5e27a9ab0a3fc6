import fractions
import functools
import typing

import mpmath
import numpy
import sympy

from discotex import _configs
from discotex import _conversions
from discotex import _errors
from discotex import _types
from discotex._hermite import _rules

#: Provides the derivative stack of the integrand at time t. ``side`` selects the
#: one-sided limit (-1 from below, +1 from above) where a crossing sits exactly on t.
StackProvider = typing.Callable[[float, int], "_types.DerivativeStack"]
JumpProvider = typing.Callable[[float], typing.Sequence[complex]]

_T = sympy.Symbol("t")


def legendre_branches() -> typing.Tuple[sympy.Expr, sympy.Expr]:
    """Closed forms of P5 (after the crossing) and Q5 (before the crossing)."""
    p5 = sympy.legendre(5, _T)
    q5 = p5 * sympy.atanh(_T) - (
        sympy.Rational(63, 8) * _T ** 4
        - sympy.Rational(49, 8) * _T ** 2
        + sympy.Rational(8, 15)
    )
    return p5, q5


@functools.lru_cache(maxsize=None)
def _branch_derivatives(count: int) -> typing.Tuple[tuple, tuple]:
    p5, q5 = legendre_branches()
    return (
        tuple(sympy.lambdify(_T, sympy.diff(p5, _T, k), "numpy") for k in range(count)),
        tuple(sympy.lambdify(_T, sympy.diff(q5, _T, k), "numpy") for k in range(count)),
    )


def legendre_jumps(count: int = 12) -> typing.List[sympy.Rational]:
    """Exact jumps P5^(d)(0) - Q5^(d)(0) for d = 0..count-1."""
    p5, q5 = legendre_branches()
    return [
        sympy.nsimplify(sympy.diff(p5 - q5, _T, d).subs(_T, 0)) for d in range(count)
    ]


def _legendre_stack(s: int) -> StackProvider:
    after, before = _branch_derivatives(s)

    def provider(t: float, side: int) -> "_types.DerivativeStack":
        use_after = t > _configs.LEGENDRE_CROSSING or (
            t == _configs.LEGENDRE_CROSSING and side > 0
        )
        functions = after if use_after else before
        return _types.DerivativeStack(tuple(complex(f(t)) for f in functions))

    return provider


def integrate_discontinuous(
    provider: StackProvider,
    jump_provider: JumpProvider,
    t_range: typing.Tuple[float, float],
    crossings: typing.Sequence[float],
    steps: int,
    order: int,
    smooth_only: bool = False,
) -> complex:
    """
    Composite discontinuous Hermite quadrature over a time range.

    Each subinterval receives the smooth two-point step; a subinterval containing a
    crossing also receives the jump correction with dt_cross measured from its left
    end. A crossing exactly on a step boundary belongs to the step on its right,
    where it enters with dt_cross = 0.

    :param provider:
        Endpoint derivative stacks of the integrand.
    :param jump_provider:
        Jumps J_0..J_(order-1) of the integrand derivatives at a crossing time.
    :param t_range:
        Integration interval (a, b).
    :param crossings:
        Sorted crossing times strictly inside (a, b).
    :param steps:
        Number of equal subintervals.
    :param order:
        Hermite rule order.
    :param smooth_only:
        Skip the jump corrections, reproducing the smooth integrator.
    """
    a, b = t_range
    if steps < 1:
        raise _errors.ValidationError(f"At least one step is required, not {steps}.")
    if any(not a < c < b for c in crossings):
        raise _errors.ValidationError(
            f"Crossings {crossings} must lie inside {t_range}."
        )

    rule = _rules.get_rule(order)
    quad = _rules.closed_form_quadrature(order)
    dt = (b - a) / steps
    edges = a + dt * numpy.arange(steps + 1)
    edges[-1] = b

    total = 0j
    for left, right in zip(edges[:-1], edges[1:]):
        inside = [c for c in crossings if left <= c < right]
        if len(inside) > 1:
            raise _errors.ValidationError(
                f"Step [{left}, {right}) holds {len(inside)} crossings; refine it."
            )
        starts_on_crossing = bool(inside) and inside[0] == left
        total += _rules.smooth_step(
            rule,
            provider(left, -1 if starts_on_crossing else 1),
            provider(right, -1),
            right - left,
        )
        if inside and not smooth_only:
            crossing = inside[0]
            total += _rules.jump_correction(
                quad, crossing - left, right - left, jump_provider(crossing)
            )
    return total


def legendre_benchmark(
    order: int,
    steps: int,
    smooth_only: bool = False,
) -> typing.Tuple[float, float]:
    """
    Integrate Q5 before t = 0 and P5 after it over [-0.55, 0.45].

    :return:
        The computed integral and its absolute error against 0.1125883303464025.
    """
    rule = _rules.get_rule(order)
    jumps = [complex(j) for j in legendre_jumps(order)]
    value = integrate_discontinuous(
        _legendre_stack(rule.s),
        lambda _: jumps,
        _configs.LEGENDRE_INTERVAL,
        [_configs.LEGENDRE_CROSSING],
        steps,
        order,
        smooth_only=smooth_only,
    )
    return value.real, abs(value.real - _configs.LEGENDRE_REFERENCE)


def _mp(value: fractions.Fraction) -> mpmath.mpf:
    return mpmath.mpf(value.numerator) / value.denominator


@functools.lru_cache(maxsize=None)
def _precise_derivatives(count: int) -> typing.Tuple[tuple, tuple]:
    return tuple(
        tuple(
            sympy.lambdify(_T, sympy.diff(branch, _T, k), "mpmath")
            for k in range(count)
        )
        for branch in legendre_branches()
    )


def _exact_interval() -> typing.Tuple[fractions.Fraction, ...]:
    start, end = _configs.LEGENDRE_INTERVAL
    return (
        _conversions.to_fraction(start),
        _conversions.to_fraction(end),
        _conversions.to_fraction(_configs.LEGENDRE_CROSSING),
    )


@functools.lru_cache(maxsize=None)
def legendre_reference(digits: int = _configs.PRECISE_DIGITS) -> mpmath.mpf:
    """Benchmark integral from tanh-sinh quadrature of each branch."""
    p5, q5 = legendre_branches()
    after = sympy.lambdify(_T, p5, "mpmath")
    before = sympy.lambdify(_T, q5, "mpmath")
    with mpmath.workdps(digits + 10):
        start, end, crossing = (_mp(x) for x in _exact_interval())
        return mpmath.quad(before, [start, crossing]) + mpmath.quad(
            after, [crossing, end]
        )


def legendre_benchmark_precise(
    order: int,
    steps: int,
    smooth_only: bool = False,
    digits: int = _configs.PRECISE_DIGITS,
) -> typing.Tuple[float, float]:
    """
    Legendre benchmark with rational step geometry and mpmath integrand values.

    Step edges, rule weights and jump polynomials stay exact rationals; only the
    branch derivatives are evaluated, at ``digits`` significant digits. The error
    is taken against ``legendre_reference`` at the same precision, so high orders
    keep converging far below the double precision floor.

    :return:
        The computed integral and its absolute error, both rounded to floats.
    """
    if steps < 1:
        raise _errors.ValidationError(f"At least one step is required, not {steps}.")
    rule = _rules.get_rule(order)
    quad = _rules.closed_form_quadrature(order)
    after, before = _precise_derivatives(rule.s)
    jumps = [fractions.Fraction(int(j.p), int(j.q)) for j in legendre_jumps(order)]
    start, end, crossing = _exact_interval()
    dt = (end - start) / steps

    with mpmath.workdps(digits):
        total = mpmath.mpf(0)
        for n in range(steps):
            left, right = start + n * dt, start + (n + 1) * dt
            left_branch = after if left > crossing else before
            right_branch = after if right > crossing else before
            for d, c in enumerate(rule.weights):
                total += _mp(c * dt ** (d + 1)) * (
                    left_branch[d](_mp(left)) + (-1) ** d * right_branch[d](_mp(right))
                )
            if not smooth_only and left <= crossing < right:
                weights = quad.evaluate_exact(dt, crossing - left)
                total += sum(_mp(w * j) for w, j in zip(weights, jumps))
        error = abs(total - legendre_reference(digits))
        return float(total), float(error)
