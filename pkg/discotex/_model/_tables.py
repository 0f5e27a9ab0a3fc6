import functools
import typing

import sympy

from discotex import _errors
from discotex import _types
from discotex._model import _chart
from discotex._model import _exact

_I = sympy.I
_R = sympy.Rational


def _pair(cos_amp: sympy.Expr, sin_amp: sympy.Expr) -> "_types.TrigPair":
    return _types.TrigPair(sympy.nsimplify(cos_amp), sympy.nsimplify(sin_amp))


def _printed_field() -> typing.Tuple["_types.TrigPair", ...]:
    """Published jumps of d^(d+1) Psi / d tau^(d+1) for v = 1/4, d = 0..11."""
    return (
        _pair(_R(4, 15), _R(272, 225) * _I),
        _pair(_R(4864, 3375) * _I, -_R(128, 225)),
        _pair(-_R(3136, 3375), -_R(90368, 50625) * _I),
        _pair(-_R(1724416, 759375) * _I, _R(69632, 50625)),
        _pair(_R(1475584, 759375), _R(33492992, 11390625) * _I),
        _pair(_R(657915904, 170859375) * _I, -_R(30507008, 11390625)),
        _pair(-_R(622084096, 170859375), -_R(13014990848, 2562890625) * _I),
        _pair(-_R(258579890176, 38443359375) * _I, _R(12585009152, 2562890625)),
        _pair(_R(253420109824, 38443359375), _R(5150958682112, 576650390625) * _I),
        _pair(
            _R(102771504185344, 8649755859375) * _I,
            -_R(5089041317888, 576650390625),
        ),
        _pair(
            -_R(102028495814656, 8649755859375),
            -_R(2052458050224128, 129746337890625) * _I,
        ),
        _pair(
            -_R(41013496602689536, 1946195068359375) * _I,
            _R(2043541949775872, 129746337890625),
        ),
    )


def _printed_operator() -> typing.Tuple["_types.TrigPair", ...]:
    """Published operator-assembled jumps for v = 1/4, d = 0..11."""
    return (
        _pair(4 * (225 + 1216 * _I) / 3375, -4 * (480 - 1020 * _I) / 3375),
        _pair(64 * (-735 + 1140 * _I) / 50625, -64 * (450 - 1412 * _I) / 50625),
        _pair(
            -64 * (11025 + 26944 * _I) / 759375,
            64 * (16320 - 21180 * _I) / 759375,
        ),
        _pair(
            (22133760 - 25866240 * _I) / sympy.Integer(11390625),
            (15667200 + 33492992 * _I) / sympy.Integer(11390625),
        ),
        _pair(
            1024 * (324225 + 642496 * _I) / sympy.Integer(170859375),
            -1024 * (446880 - 490620 * _I) / sympy.Integer(170859375),
        ),
        _pair(
            16384 * (-569535 + 602340 * _I) / sympy.Integer(2562890625),
            -16384 * (418950 + 794372 * _I) / sympy.Integer(2562890625),
        ),
        _pair(
            16384 * (8543025 + 15782464 * _I) / sympy.Integer(38443359375),
            -16384 * (11521920 - 11915580 * _I) / sympy.Integer(38443359375),
        ),
        _pair(
            (3801301647360 - 3878698352640 * _I) / sympy.Integer(576650390625),
            (2831627059200 + 5150958682112 * _I) / sympy.Integer(576650390625),
        ),
        _pair(
            262144 * (217512225 + 392042176 * _I) / sympy.Integer(8649755859375),
            -262144 * (291197280 - 294740220 * _I) / sympy.Integer(8649755859375),
        ),
        _pair(
            4194304 * (-364882335 + 367539540 * _I) / sympy.Integer(129746337890625),
            -4194304 * (272997450 + 489344132 * _I) / sympy.Integer(129746337890625),
        ),
        _pair(
            -4194304
            * (5473235025 + 9778379584 * _I)
            / sympy.Integer(1946195068359375),
            -4194304
            * (7308275520 - 7340161980 * _I)
            / sympy.Integer(1946195068359375),
        ),
        _pair(
            (613597550959656960 - 615202449040343040 * _I)
            / sympy.Integer(29192926025390625),
            (459796938699571200 + 819841959232274432 * _I)
            / sympy.Integer(29192926025390625),
        ),
    )


def printed_time_jumps() -> "_types.TimeJumpTable":
    """
    Time-jump tables exactly as published for v = 1/4.

    The field family is exact for this model. The published operator family is
    not the Pi-row jump field[d + 1]; its first entry equals field[1] + field[0].
    It reproduces the published data but not the exact solution.
    """
    return _types.TimeJumpTable(
        source="printed",
        field=_printed_field(),
        operator=_printed_operator(),
    )


@functools.lru_cache(maxsize=None)
def exact_time_jumps(
    velocity: "_chart.Velocity",
    depth: int = 12,
) -> "_types.TimeJumpTable":
    """
    Closed-form time-jump tables for any velocity.

    ``field[d]`` is the jump of d^(d+1) Psi / d tau^(d+1); the Pi rows consume the
    jump of the operator applied to the state, which equals the jump of
    d^(d+2) Psi / d tau^(d+2) because the field solves the equation on both sides.
    Rational velocities give exact sympy amplitudes.
    """
    if depth < 1:
        raise _errors.ValidationError(
            f"A time-jump table needs depth >= 1, not {depth}."
        )
    pairs = [_exact.time_jump_pair(velocity, a) for a in range(1, depth + 2)]
    return _types.TimeJumpTable(
        source="exact",
        field=tuple(pairs[:depth]),
        operator=tuple(pairs[1 : depth + 1]),
    )
