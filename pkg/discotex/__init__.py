"""Discontinuous time-symmetric Hermite integration of particle-sourced waves."""
import argparse as _argparse

from discotex import _runner


def _add_run_arguments(parser: _argparse.ArgumentParser):
    """Flags shared by every command; unset flags fall back to env and config."""
    parser.add_argument("--order", type=int)
    parser.add_argument("--nodes", type=int)
    parser.add_argument("--jumps", type=int)
    parser.add_argument("--dt", type=float)
    parser.add_argument("--tau-start", type=float)
    parser.add_argument("--tau-end", type=float)
    parser.add_argument("--velocity")
    parser.add_argument("--out")
    parser.add_argument("--config")
    parser.add_argument("--threads", type=int)
    parser.add_argument("--seed", type=int)
    parser.add_argument("--pretty-print", action="store_true")


def parse(arguments: list = None) -> dict:
    """Parse command line arguments to invoke a discotex command."""
    parser = _argparse.ArgumentParser(prog="discotex")
    commands = parser.add_subparsers(dest="command", required=True)

    quad = commands.add_parser("quad", help="Legendre quadrature benchmark.")
    _add_run_arguments(quad)
    quad.add_argument("--orders")
    quad.add_argument("--steps")
    quad.add_argument("--smooth", action="store_true")
    quad.add_argument("--precise", action="store_true")

    evolve = commands.add_parser("evolve", help="Evolve the sourced wave equation.")
    _add_run_arguments(evolve)
    evolve.add_argument("--snapshot-tau", type=float)
    evolve.add_argument("--printed-jumps", action="store_true")

    sweep = commands.add_parser("sweep", help="Sweep one convergence control.")
    _add_run_arguments(sweep)
    sweep.add_argument("--factor", choices=("nodes", "jumps", "dt"))
    sweep.add_argument("--values")
    sweep.add_argument("--orders")

    bench = commands.add_parser("bench", help="Timing and error per order.")
    _add_run_arguments(bench)
    bench.add_argument("--orders")

    selftest = commands.add_parser("selftest", help="Run the consistency checks.")
    _add_run_arguments(selftest)

    return vars(parser.parse_args(arguments))


def main():
    """Execute a discotex command and return its exit code."""
    return _runner.main(parse())
