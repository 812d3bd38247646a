"""The `wave-check` command: time-domain cross-checks of the frequency data.

Writes the Fourier-link table, the Parseval balance and boundary time
traces. Artifacts are written even when a check fails; the run then exits
with the accuracy status.
"""

from __future__ import annotations

from pathlib import Path

import click
import numpy as np

from helmstab.artifacts import write_csv
from helmstab.cli._shared import Outcome, check_nodes, execute, run_options
from helmstab.config import RunConfig
from helmstab.diagnostics import Diagnostic, codes
from helmstab.forward import FrequencyGrid
from helmstab.wavedom import (
    fourier_link,
    parseval_band,
    parseval_report,
    wave_trace,
    write_traces,
)

LINK_HEADER = (
    "node", "k", "re_temporal", "im_temporal", "re_helmholtz", "im_helmholtz",
    "relative_error", "tail_bound",
)
PARSEVAL_HEADER = (
    "time_side", "frequency_side", "frequency_tail_bound", "discrepancy", "t_max", "dt",
    "omega_max",
)


def _wave_check(cfg: RunConfig, out: Path, threads: int | None) -> Outcome:
    domain, source, wave = cfg.scene.domain, cfg.scene.source, cfg.wave
    nodes = check_nodes(cfg, wave.nodes)
    outcome = Outcome()

    rows = fourier_link(domain, source, nodes, wave.ks, wave.eval, threads=threads)
    outcome.artifacts.append(
        write_csv(
            out / "fourier_link.csv",
            LINK_HEADER,
            (
                (r.node, r.k, r.temporal.real, r.temporal.imag, r.helmholtz.real,
                 r.helmholtz.imag, r.relative_error, r.tail_bound)
                for r in rows
            ),
        )
    )
    worst = max((r.relative_error for r in rows), default=0.0)
    outcome.summary["max_link_error"] = worst
    if worst > wave.link_tolerance:
        outcome.diagnostics.append(
            Diagnostic.error(
                codes.CROSS_CHECK_FAILED,
                f"Fourier link deviates by {worst:.3e} (tolerance {wave.link_tolerance:g})",
            ).note("refine wave.dt or the cone quadrature orders")
        )

    if wave.parseval:
        omega_max = wave.omega_max if wave.omega_max is not None else parseval_band(wave.eval)
        grid = FrequencyGrid(
            omega_max,
            points_per_unit=cfg.grid.points_per_unit,
            panel_order=cfg.grid.panel_order,
        )
        rep = parseval_report(domain, source, grid, wave.eval, threads=threads)
        outcome.artifacts.append(
            write_csv(
                out / "parseval.csv",
                PARSEVAL_HEADER,
                [(rep.time_side, rep.frequency_side, rep.frequency_tail_bound,
                  rep.discrepancy, rep.t_max, rep.dt, rep.omega_max)],
            )
        )
        outcome.summary["parseval_discrepancy"] = rep.discrepancy
        if rep.discrepancy > wave.parseval_tolerance:
            outcome.diagnostics.append(
                Diagnostic.error(
                    codes.CROSS_CHECK_FAILED,
                    f"Parseval balance off by {rep.discrepancy:.3e} "
                    f"(tolerance {wave.parseval_tolerance:g})",
                ).note(f"frequency tail beyond {rep.omega_max:g} is at most "
                       f"{rep.frequency_tail_bound:.3e}")
            )

    times = np.arange(0.0, wave.trace_end + 0.5 * wave.trace_step, wave.trace_step)
    traces = [(n, wave_trace(domain.nodes[n], times, source, wave.eval)) for n in nodes]
    outcome.artifacts.append(write_traces(out / "traces.csv", traces))
    return outcome


@click.command("wave-check")
@run_options
def wave_check(
    config_path: Path, out: Path | None, seed: int | None, threads: int | None, output_format: str
) -> None:
    """Compare temporal Fourier transforms with the Helmholtz field and check Parseval."""
    execute(
        "wave-check", _wave_check, config_path,
        out=out, seed=seed, threads=threads, output_format=output_format,
    )
