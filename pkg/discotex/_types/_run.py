import dataclasses
import fractions
import json
import os
import pathlib
import typing

import numpy
import yaml

from discotex import _configs
from discotex import _conversions
from discotex import _errors

FACTORS = ("nodes", "jumps", "dt")


def _or(*args: typing.Any, default: typing.Any = None) -> typing.Any:
    """
    Find the first non-None element in the args.

    If none of the values are not None, the default value will be returned instead.
    """
    return next((x for x in args if x is not None), default)


def _or_truthy(*args: typing.Any, default: typing.Any = None) -> typing.Any:
    """
    Find the first truthy element in the args.

    If none of the values are truthy, the default value will be returned instead.
    """
    return next((x for x in args if x), default)


def _load_configs(
    args: typing.Dict[str, typing.Any],
    config_path: typing.Union[str, pathlib.Path] = None,
) -> typing.Dict[str, typing.Any]:
    """
    Load configuration data from the config path.

    Config path lookup is prioritized in the following way:
    - config_path argument specified in this function signature.
    - `--config` command line argument.
    - DISCOTEX_CONFIG environmental variable.

    If no path is given or the file is not found, a blank configuration will be
    used instead. Dashes in keys are normalized to underscores.
    """
    path = (
        config_path
        or args.get("config")
        or os.environ.get(f"{_configs.ENV_PREFIX}CONFIG")
    )
    if not path:
        return {}

    p = pathlib.Path(path)
    try:
        raw = yaml.safe_load(p.resolve().read_text()) or {}
    except FileNotFoundError:
        return {}
    except yaml.YAMLError as error:
        raise _errors.ValidationError(
            f'Config file "{p}" is not valid YAML.'
        ) from error

    if not isinstance(raw, dict):
        raise _errors.ValidationError(f'Config file "{p}" must hold a mapping of keys.')
    return {str(k).replace("-", "_"): v for k, v in raw.items()}


def _env(key: str) -> typing.Optional[str]:
    return os.environ.get(f"{_configs.ENV_PREFIX}{key.upper()}")


@dataclasses.dataclass()
class RunConfig:
    """Configuration data structure for discotex commands."""

    command: str = "evolve"
    order: int = _configs.DEFAULT_ORDER
    nodes: int = _configs.DEFAULT_NODES
    jumps: int = _configs.DEFAULT_JUMPS
    dt: float = _configs.DEFAULT_DT
    tau_start: float = _configs.DEFAULT_TAU_START
    tau_end: float = _configs.DEFAULT_TAU_END
    velocity: fractions.Fraction = _configs.DEFAULT_VELOCITY
    out: typing.Optional[str] = None
    threads: int = _configs.DEFAULT_THREADS
    seed: int = _configs.DEFAULT_SEED
    snapshot_tau: typing.Optional[float] = None
    printed_jumps: bool = False
    smooth: bool = False
    precise: bool = False
    pretty_print: bool = False
    orders: typing.List[int] = dataclasses.field(
        default_factory=lambda: list(_configs.ORDERS)
    )
    steps: typing.List[int] = dataclasses.field(
        default_factory=lambda: list(_configs.DEFAULT_QUAD_STEPS)
    )
    factor: str = "dt"
    values: typing.List[float] = dataclasses.field(default_factory=lambda: [])

    @property
    def step_count(self) -> int:
        """Number of steps of size dt that span the run window."""
        return int(round((self.tau_end - self.tau_start) / self.dt))

    @property
    def output_directory(self) -> typing.Optional[pathlib.Path]:
        """Directory receiving output artifacts, if any."""
        return pathlib.Path(self.out) if self.out else None

    def with_changes(self, **changes: typing.Any) -> "RunConfig":
        """Copy of this configuration with the given fields replaced."""
        return dataclasses.replace(self, **changes)

    def load(
        self,
        args: typing.Dict[str, typing.Any],
        config_path: typing.Union[str, pathlib.Path] = None,
    ) -> "RunConfig":
        """
        Populate the run config from arguments, environment and a config file.

        Values are prioritized in the following way:
        - command line arguments.
        - DISCOTEX_<KEY> environmental variables.
        - entries of the YAML config file.
        - built-in defaults reproducing the reference evolution.

        The populated config is validated and every violation is reported at once,
        including values that cannot be read as the type of their field.
        """
        raw = _load_configs(args, config_path)
        found: typing.List[str] = []

        def pick(key: str, default: typing.Any) -> typing.Any:
            return _or(args.get(key), _env(key), raw.get(key), default=default)

        def convert(
            key: str,
            converter: typing.Callable[[typing.Any], typing.Any],
            default: typing.Any,
        ) -> typing.Any:
            try:
                return converter(pick(key, default))
            except _errors.ValidationError as error:
                found.extend(f"{key}: {problem}" for problem in error.problems)
                return default

        self.command = _or(args.get("command"), self.command)
        self.order = convert("order", _conversions.to_int, self.order)
        self.nodes = convert("nodes", _conversions.to_int, self.nodes)
        self.jumps = convert("jumps", _conversions.to_int, self.jumps)
        self.dt = convert("dt", _conversions.to_float, self.dt)
        self.tau_start = convert("tau_start", _conversions.to_float, self.tau_start)
        self.tau_end = convert("tau_end", _conversions.to_float, self.tau_end)
        self.velocity = convert("velocity", _conversions.to_fraction, self.velocity)
        self.out = pick("out", self.out)
        self.threads = convert("threads", _conversions.to_int, self.threads)
        self.seed = convert("seed", _conversions.to_int, self.seed)
        self.snapshot_tau = convert(
            "snapshot_tau",
            lambda v: None if v is None else _conversions.to_float(v),
            self.snapshot_tau,
        )

        self.printed_jumps = _or_truthy(
            args.get("printed_jumps"),
            _conversions.to_bool(_env("printed_jumps")),
            _conversions.to_bool(raw.get("printed_jumps")),
            default=self.printed_jumps,
        )
        self.smooth = _or_truthy(
            args.get("smooth"),
            _conversions.to_bool(_env("smooth")),
            _conversions.to_bool(raw.get("smooth")),
            default=self.smooth,
        )
        self.precise = _or_truthy(
            args.get("precise"),
            _conversions.to_bool(_env("precise")),
            _conversions.to_bool(raw.get("precise")),
            default=self.precise,
        )
        self.pretty_print = _or_truthy(
            self.pretty_print,
            args.get("pretty_print"),
            _conversions.to_bool(_env("pretty_print")),
            _conversions.to_bool(raw.get("pretty_print")),
            default=False,
        )

        self.orders = convert("orders", _conversions.to_int_list, self.orders)
        self.steps = convert("steps", _conversions.to_int_list, self.steps)
        self.factor = str(pick("factor", self.factor))
        self.values = convert("values", _conversions.to_float_list, self.values)

        found.extend(self.problems())
        if found:
            raise _errors.ValidationError(*found)
        return self

    def problems(self) -> typing.List[str]:
        """List every violated configuration rule."""
        found = []
        if self.order % 2 or not 2 <= self.order <= 12:
            found.append(f"order must be even and in [2, 12], not {self.order}")
        if self.nodes < 8:
            found.append(f"nodes must be at least 8, not {self.nodes}")
        if self.jumps < self.order:
            found.append(
                f"jumps ({self.jumps}) must be at least the order ({self.order})"
            )
        if not self.dt > 0:
            found.append(f"dt must be positive, not {self.dt}")
        if self.tau_end < self.tau_start:
            found.append(
                f"tau_end ({self.tau_end}) must not precede"
                f" tau_start ({self.tau_start})"
            )
        if not abs(self.velocity) < 1:
            found.append(f"velocity must satisfy |v| < 1, not {self.velocity}")
        if self.threads < 1:
            found.append(f"threads must be at least 1, not {self.threads}")
        if not self.orders:
            found.append("orders must not be empty")
        bad_orders = [o for o in self.orders if o not in _configs.ORDERS]
        if bad_orders:
            found.append(f"orders {bad_orders} are not even values in [2, 12]")
        if not self.steps:
            found.append("steps must not be empty")
        if any(s < 1 for s in self.steps):
            found.append(f"steps must all be positive, not {self.steps}")
        if self.factor not in FACTORS:
            found.append(f"factor must be one of {FACTORS}, not {self.factor}")
        if self.command == "sweep" and not self.values:
            found.append("values must not be empty for a sweep")
        return found

    def validate(self) -> "RunConfig":
        """Raise a single ValidationError listing every configuration problem."""
        found = self.problems()
        if found:
            raise _errors.ValidationError(*found)
        return self

    def log(self, message: str, data: dict):
        """Log the message and data for structured output."""
        print(
            json.dumps(
                {"message": message, "data": data},
                indent=2 if self.pretty_print else None,
                default=str,
            )
        )

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        """Convert to a dictionary representation that is JSON serializable for logs."""
        return {
            "command": self.command,
            "order": self.order,
            "nodes": self.nodes,
            "jumps": self.jumps,
            "dt": self.dt,
            "tau_start": self.tau_start,
            "tau_end": self.tau_end,
            "velocity": str(self.velocity),
            "out": self.out,
            "threads": self.threads,
            "seed": self.seed,
            "snapshot_tau": self.snapshot_tau,
            "printed_jumps": self.printed_jumps,
            "smooth": self.smooth,
            "precise": self.precise,
            "orders": self.orders,
            "steps": self.steps,
            "factor": self.factor,
            "values": self.values,
        }


@dataclasses.dataclass(frozen=True, eq=False)
class EvolutionResult:
    """Artifacts of one evolution: waveform, phase portrait, errors and timing."""

    config: RunConfig
    taus: numpy.ndarray
    #: Psi and Pi at the last grid point, sigma = 1, for every recorded time.
    psi_waveform: numpy.ndarray
    pi_waveform: numpy.ndarray
    #: Relative error |1 - Psi_numerical / Psi_exact| at sigma = 1.
    eta: numpy.ndarray
    snapshot_tau: float
    snapshot_nodes: numpy.ndarray
    snapshot_psi: numpy.ndarray
    snapshot_pi: numpy.ndarray
    wall_seconds: float
    diagnostics: typing.Dict[str, typing.Any]

    @property
    def steps(self) -> int:
        """Number of steps taken."""
        return len(self.taus) - 1

    @property
    def final_eta(self) -> float:
        """Relative error at the final time."""
        return float(self.eta[-1])

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        """Convert to a dictionary representation that is JSON serializable for logs."""
        return {
            "order": self.config.order,
            "nodes": self.config.nodes,
            "jumps": self.config.jumps,
            "dt": self.config.dt,
            "steps": self.steps,
            "final_tau": float(self.taus[-1]),
            "final_eta": self.final_eta,
            "wall_seconds": self.wall_seconds,
            "diagnostics": self.diagnostics,
        }


@dataclasses.dataclass(frozen=True)
class QuadRow:
    """One row of the quadrature benchmark table."""

    variant: str
    order: int
    steps: int
    dt: float
    value: float
    abs_error: float
    wall_seconds: float

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        """Convert to a dictionary representation that is JSON serializable for logs."""
        return dataclasses.asdict(self)


@dataclasses.dataclass(frozen=True)
class SweepRow:
    """One cell of a control-factor sweep."""

    factor: str
    value: float
    order: int
    eta_final: float
    wall_seconds: float

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        """Convert to a dictionary representation that is JSON serializable for logs."""
        return dataclasses.asdict(self)
