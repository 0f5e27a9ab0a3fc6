import pathlib
import traceback
import typing

from discotex import _errors
from discotex import _harness
from discotex import _types

Command = typing.Callable[["_types.RunConfig"], typing.Dict[str, typing.Any]]

COMMANDS: typing.Dict[str, Command] = {
    "quad": _harness.run_quad,
    "evolve": _harness.run_evolve,
    "sweep": _harness.run_sweep,
    "bench": _harness.run_bench,
    "selftest": _harness.run_selftest,
}


def _execute(configs: "_types.RunConfig") -> int:
    """Run the configured command and log its summary."""
    command = COMMANDS.get(configs.command)
    if command is None:
        raise _errors.ValidationError(
            f'Unknown command "{configs.command}"; expected one of {sorted(COMMANDS)}.'
        )

    summary = command(configs)
    configs.log(f"{configs.command} complete", summary)
    # Self-test verdicts are the only summaries able to fail without raising.
    return 0 if summary.get("passed", True) else 1


def main(
    args: typing.Dict[str, typing.Any],
    config_path_override: typing.Union[str, pathlib.Path] = None,
) -> int:
    """
    Execute a discotex command and map failures onto process exit codes.

    :param args:
        Arguments parsed from the command line. These arguments will take precedence
        over arguments specified by other means during execution.
    :param config_path_override:
        An override for the config path that is only used during non-normal execution
        calls. Most commonly this will be for testing purposes, but alternative calling
        implementations of this code could utilize this as well.
    :return:
        0 on success, 1 for validation errors and failed self-tests, 2 for numerical
        failures and 3 for output errors.
    """
    configs = _types.RunConfig(pretty_print=bool(args.get("pretty_print")))
    try:
        configs.load(args, config_path_override)
        configs.log("starting", configs.to_dict())
        return _execute(configs)
    except _errors.DiscotexError as error:
        traceback.print_exc()
        configs.log("failed", error.to_dict())
        return error.exit_code
