import pathlib
import typing

import numpy

from discotex import _errors
from discotex import _types


def header_lines(config: "_types.RunConfig", title: str) -> typing.List[str]:
    """Comment lines recording the artifact title and the full run configuration."""
    lines = [f"# {title}"]
    lines.extend(f"# {key} = {value}" for key, value in config.to_dict().items())
    return lines


def format_table(
    config: "_types.RunConfig",
    title: str,
    columns: typing.Sequence[str],
    rows: typing.Iterable[typing.Sequence[typing.Any]],
) -> str:
    """Whitespace separated columns below a commented header naming each column."""
    lines = header_lines(config, title)
    lines.append("# " + " ".join(columns))
    for row in rows:
        lines.append(" ".join(_format_cell(value) for value in row))
    return "\n".join(lines) + "\n"


def _format_cell(value: typing.Any) -> str:
    if isinstance(value, (float, numpy.floating)):
        return f"{value:.16e}"
    return str(value)


def write_table(
    config: "_types.RunConfig",
    name: str,
    title: str,
    columns: typing.Sequence[str],
    rows: typing.Iterable[typing.Sequence[typing.Any]],
) -> typing.Optional[pathlib.Path]:
    """
    Write one artifact into the configured output directory.

    Nothing is written when no output directory is configured.

    :return:
        The written path, or None when output is disabled.
    """
    directory = config.output_directory
    if directory is None:
        return None

    path = directory.joinpath(name)
    try:
        directory.mkdir(parents=True, exist_ok=True)
        path.write_text(format_table(config, title, columns, rows))
    except OSError as error:
        raise _errors.OutputError(path, str(error)) from error
    return path
