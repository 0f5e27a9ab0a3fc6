import typing

from discotex import _stepper
from discotex import _types
from discotex._harness import _output


def write_evolution(
    config: "_types.RunConfig",
    result: "_types.EvolutionResult",
) -> typing.List[str]:
    """
    Write the snapshot, waveform, phase portrait and error series of a run.

    :return:
        Paths of the written files, empty when output is disabled.
    """
    written = [
        _output.write_table(
            config,
            "snapshot.dat",
            f"Field snapshot at tau = {result.snapshot_tau}",
            ("sigma", "re_psi", "im_psi", "re_pi", "im_pi"),
            (
                (float(s), p.real, p.imag, q.real, q.imag)
                for s, p, q in zip(
                    result.snapshot_nodes, result.snapshot_psi, result.snapshot_pi
                )
            ),
        ),
        _output.write_table(
            config,
            "waveform.dat",
            "Waveform at sigma = 1",
            ("tau", "re_psi", "im_psi", "re_pi", "im_pi"),
            (
                (float(t), p.real, p.imag, q.real, q.imag)
                for t, p, q in zip(result.taus, result.psi_waveform, result.pi_waveform)
            ),
        ),
        _output.write_table(
            config,
            "phase.dat",
            "Phase portrait at sigma = 1",
            ("re_psi", "re_pi"),
            ((p.real, q.real) for p, q in zip(result.psi_waveform, result.pi_waveform)),
        ),
        _output.write_table(
            config,
            "eta.dat",
            "Relative error at sigma = 1",
            ("tau", "eta"),
            ((float(t), float(e)) for t, e in zip(result.taus, result.eta)),
        ),
    ]
    return [str(p) for p in written if p is not None]


def run_evolve(config: "_types.RunConfig") -> typing.Dict[str, typing.Any]:
    """Evolve the default problem and export its artifacts."""
    result = _stepper.evolve(config)
    return {**result.to_dict(), "files": write_evolution(config, result)}
