import typing


class DiscotexError(Exception):
    """Base class for failures surfaced by the discotex command line."""

    #: Process exit code reported when this error aborts a command.
    exit_code: int = 1

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        """Convert to a dictionary representation that is JSON serializable for logs."""
        return {"type": type(self).__name__, "error": str(self)}


class ValidationError(DiscotexError, ValueError):
    """Invalid configuration or violated operation precondition."""

    exit_code = 1

    def __init__(self, *problems: str):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        """Convert to a dictionary representation that is JSON serializable for logs."""
        return {**super().to_dict(), "problems": self.problems}


class NumericalError(DiscotexError, ArithmeticError):
    """Non-finite state, singular solve or degenerate jump recurrence."""

    exit_code = 2


class OutputError(DiscotexError, OSError):
    """Failure writing an output artifact."""

    exit_code = 3

    def __init__(self, path: typing.Any, message: str):
        self.path = str(path)
        super().__init__(f'Unable to write "{self.path}": {message}')

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        """Convert to a dictionary representation that is JSON serializable for logs."""
        return {**super().to_dict(), "path": self.path}
