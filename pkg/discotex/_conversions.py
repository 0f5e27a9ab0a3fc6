import fractions
import typing

from discotex import _errors


def to_fraction(
    value: typing.Union[str, int, float, fractions.Fraction]
) -> fractions.Fraction:
    """
    Convert a velocity-like value into an exact rational.

    For example "1/4", "0.25", 0.25 and Fraction(1, 4) all become Fraction(1, 4).
    Floats are converted through their shortest decimal representation so that
    configuration values like 0.3 stay 3/10 instead of the nearest binary float.
    """
    if isinstance(value, fractions.Fraction):
        return value
    try:
        return fractions.Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError) as error:
        raise _errors.ValidationError(
            f'Unable to read "{value}" as a number.'
        ) from error


def to_int(value: typing.Any) -> int:
    """
    Convert an integer-like value, rejecting fractional and non-numeric input.

    For example "6", 6 and 6.0 all become 6 while "six" and 6.5 are rejected.
    """
    if isinstance(value, bool):
        raise _errors.ValidationError(f'Unable to read "{value}" as an integer.')
    try:
        number = fractions.Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError) as error:
        raise _errors.ValidationError(
            f'Unable to read "{value}" as an integer.'
        ) from error
    if number.denominator != 1:
        raise _errors.ValidationError(f'"{value}" is not a whole number.')
    return int(number)


def to_float(value: typing.Any) -> float:
    """Convert a number-like value such as "0.01" or 1e-2 into a float."""
    if isinstance(value, bool):
        raise _errors.ValidationError(f'Unable to read "{value}" as a number.')
    try:
        return float(value)
    except (TypeError, ValueError) as error:
        raise _errors.ValidationError(
            f'Unable to read "{value}" as a number.'
        ) from error


def _split(
    value: typing.Union[str, typing.Iterable[typing.Any]]
) -> typing.List[typing.Any]:
    if isinstance(value, str):
        return [v.strip() for v in value.split(",") if v.strip()]
    if isinstance(value, (int, float)):
        return [value]
    return list(value)


def to_int_list(
    value: typing.Union[str, typing.Iterable[typing.Any], None]
) -> typing.List[int]:
    """Convert "2,4,6" (or a YAML list) into a list of integers."""
    if value is None:
        return []
    try:
        return [to_int(v) for v in _split(value)]
    except _errors.ValidationError as error:
        raise _errors.ValidationError(
            f'Unable to read "{value}" as a list of integers.'
        ) from error


def to_float_list(
    value: typing.Union[str, typing.Iterable[typing.Any], None]
) -> typing.List[float]:
    """Convert "0.01,0.005" (or a YAML list) into a list of floats."""
    if value is None:
        return []
    try:
        return [to_float(v) for v in _split(value)]
    except _errors.ValidationError as error:
        raise _errors.ValidationError(
            f'Unable to read "{value}" as a list of numbers.'
        ) from error


def to_bool(value: typing.Any) -> bool:
    """Interpret flag-like values from environment variables and config files."""
    if isinstance(value, str):
        return value.strip().lower() in ("1", "true", "yes", "on")
    return bool(value)
