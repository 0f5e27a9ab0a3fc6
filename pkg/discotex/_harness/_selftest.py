import fractions
import math
import typing

import numpy
import sympy

from discotex import _collocation
from discotex import _configs
from discotex import _hermite
from discotex import _model
from discotex import _stepper
from discotex import _types

Check = typing.Callable[["_types.RunConfig"], typing.Tuple[bool, str]]

#: Jumps of the Legendre benchmark integrand as published, d = 0..11.
LEGENDRE_JUMPS = (
    fractions.Fraction(8, 15),
    fractions.Fraction(15, 8),
    fractions.Fraction(-16),
    fractions.Fraction(-105, 2),
    fractions.Fraction(384),
    fractions.Fraction(945),
    fractions.Fraction(-3840),
    fractions.Fraction(0),
    fractions.Fraction(-46080),
    fractions.Fraction(0),
    fractions.Fraction(-1935360),
    fractions.Fraction(0),
)

TILDE_NAMES = ("epsilon", "varrho", "chi", "iota")


def pade_coefficients(s: int) -> typing.List[fractions.Fraction]:
    """Numerator coefficients of the diagonal [s/s] Pade approximant of exp."""
    return [
        fractions.Fraction(
            math.factorial(2 * s - k) * math.factorial(s),
            math.factorial(2 * s) * math.factorial(k) * math.factorial(s - k),
        )
        for k in range(s + 1)
    ]


def step_polynomials(
    order: int,
) -> typing.Tuple[typing.List[fractions.Fraction], typing.List[fractions.Fraction]]:
    """Scalar P and Q of an order-2s step, with P = Q + z TEX(z)."""
    implicit = _stepper.implicit_coefficients(order)
    tex = _stepper.tex_coefficients(order)
    degree = max(implicit)
    q = [implicit.get(k, fractions.Fraction(0)) for k in range(degree + 1)]
    p = [q[0]] + [
        q[k] + tex.get(k - 1, fractions.Fraction(0)) for k in range(1, degree + 1)
    ]
    return p, q


def check_quadrature_oracle(config: "_types.RunConfig") -> typing.Tuple[bool, str]:
    """Transcribed and closed-form jump quadratures equal the derived ones."""
    mismatched = []
    for order in _configs.ORDERS:
        derived = _hermite.derive_jump_quadrature(order).coeffs
        if _hermite.closed_form_quadrature(order).coeffs != derived:
            mismatched.append(f"closed-form H{order}")
        if order <= 8 and _hermite.get_transcribed_quadrature(order).coeffs != derived:
            mismatched.append(f"transcribed H{order}")
    return not mismatched, ", ".join(mismatched) or "all orders agree"


def check_pade(config: "_types.RunConfig") -> typing.Tuple[bool, str]:
    """Scalar step maps are the diagonal Pade approximants of exp."""
    failed = []
    for order in _configs.ORDERS:
        s = order // 2
        p, q = step_polynomials(order)
        expected = pade_coefficients(s)
        alternating = [c * (-1) ** k for k, c in enumerate(expected)]
        if p != expected or q != alternating:
            failed.append(f"H{order}")
    return not failed, ", ".join(failed) or "all orders are diagonal Pade"


def check_unitarity(config: "_types.RunConfig") -> typing.Tuple[bool, str]:
    """Scalar step maps have modulus one on the imaginary axis."""
    worst = 0.0
    for order in _configs.ORDERS:
        p, q = step_polynomials(order)
        for y in (0.1, 0.5, 1.0, 2.0):
            z = 1j * y
            value = numpy.polyval([float(c) for c in reversed(p)], z) / numpy.polyval(
                [float(c) for c in reversed(q)], z
            )
            worst = max(worst, abs(abs(value) - 1.0))
    return worst <= 1e-13, f"largest modulus deviation {worst:.3e}"


def check_tildes(config: "_types.RunConfig") -> typing.Tuple[bool, str]:
    """Simplified tilde coefficients agree with the ratios to Gamma."""
    coeffs = _model.flat_wave_coefficients()
    sigma = numpy.linspace(0.01, 0.99, 99)
    worst = max(
        float(numpy.max(numpy.abs(coeffs.tilde(n, sigma) - coeffs.ratio(n, sigma))))
        for n in TILDE_NAMES
    )
    return worst <= 1e-12, f"largest deviation {worst:.3e}"


def check_time_jump_tables(config: "_types.RunConfig") -> typing.Tuple[bool, str]:
    """Published field time jumps equal the closed-form ones for v = 1/4."""
    printed = _model.printed_time_jumps()
    exact = _model.exact_time_jumps(_configs.PRINTED_TABLE_VELOCITY)
    differing = [
        d
        for d, (a, b) in enumerate(zip(printed.field, exact.field))
        if sympy.simplify(a.cos_amp - b.cos_amp) != 0
        or sympy.simplify(a.sin_amp - b.sin_amp) != 0
    ]
    operator = printed.operator[0] - (printed.field[1] + printed.field[0])
    regression = sympy.simplify(operator.cos_amp) == 0 and (
        sympy.simplify(operator.sin_amp) == 0
    )
    passed = not differing and regression
    return passed, (
        f"differing entries {differing}; first operator entry regression {regression}"
    )


def _sample_times(config: "_types.RunConfig", count: int = 3) -> numpy.ndarray:
    rng = numpy.random.default_rng(config.seed)
    return numpy.sort(rng.uniform(config.tau_start, config.tau_end, count))


def check_recurrence(config: "_types.RunConfig") -> typing.Tuple[bool, str]:
    """Jump recurrence reproduces the jumps expanded from the exact solution."""
    traj = _model.BoostedTrajectory(config.velocity)
    coeffs = _model.flat_wave_coefficients()
    m_max = config.jumps
    worst = 0.0
    for tau in _sample_times(config):
        psi_series, _ = _model.assemble_jump_data(traj, coeffs, float(tau), m_max)
        exact = _model.exact_spatial_jumps(traj, float(tau), m_max)
        scale = numpy.maximum(numpy.abs(exact), 1.0)
        deviation = numpy.abs(psi_series.values() - exact) / scale
        worst = max(worst, float(numpy.max(deviation)))
    return worst <= 1e-8, f"largest relative deviation {worst:.3e}"


def check_time_jump_assembly(config: "_types.RunConfig") -> typing.Tuple[bool, str]:
    """Pi jumps and operator assembly reproduce the first time-jump entries."""
    traj = _model.BoostedTrajectory(config.velocity)
    coeffs = _model.flat_wave_coefficients()
    table = _model.exact_time_jumps(config.velocity)
    worst = 0.0
    for tau in _sample_times(config):
        tau = float(tau)
        psi_series, pi_series = _model.assemble_jump_data(traj, coeffs, tau, 6)
        phase = traj.phase(tau)
        field = table.field[0].numeric.evaluate(phase)
        operator = table.operator[0].numeric.evaluate(phase)
        assembled = _collocation.operator_time_jump(psi_series, traj, coeffs, 0)
        worst = max(
            worst,
            abs(pi_series.entries[0].value - field) / max(abs(field), 1.0),
            abs(assembled - operator) / max(abs(operator), 1.0),
        )
    return worst <= 1e-12, f"largest relative deviation {worst:.3e}"


def check_legendre(config: "_types.RunConfig") -> typing.Tuple[bool, str]:
    """Benchmark jumps match the published list and H12 reaches the reference."""
    jumps = _hermite.legendre_jumps(len(LEGENDRE_JUMPS))
    jumps_match = [
        fractions.Fraction(int(sympy.numer(j)), int(sympy.denom(j))) for j in jumps
    ] == list(LEGENDRE_JUMPS)
    _, error = _hermite.legendre_benchmark(12, 64)
    return jumps_match and error <= 1e-12, (
        f"jumps match {jumps_match}; H12 error {error:.3e}"
    )


CHECKS: typing.Tuple[typing.Tuple[str, Check], ...] = (
    ("quadrature_oracle", check_quadrature_oracle),
    ("pade", check_pade),
    ("unitarity", check_unitarity),
    ("tilde_coefficients", check_tildes),
    ("time_jump_tables", check_time_jump_tables),
    ("jump_recurrence", check_recurrence),
    ("time_jump_assembly", check_time_jump_assembly),
    ("legendre", check_legendre),
)


def run_selftest(config: "_types.RunConfig") -> typing.Dict[str, typing.Any]:
    """Run every consistency check and report a verdict per check."""
    report = []
    for name, check in CHECKS:
        passed, detail = check(config)
        verdict = {"check": name, "passed": bool(passed), "detail": detail}
        config.log("PASS" if passed else "FAIL", verdict)
        report.append(verdict)
    return {"checks": report, "passed": all(r["passed"] for r in report)}
