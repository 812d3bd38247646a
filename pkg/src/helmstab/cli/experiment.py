"""The `sweep-experiment` command: reconstruction error against the frequency cap."""

from __future__ import annotations

from pathlib import Path

import click

from helmstab.artifacts import write_json
from helmstab.cli._shared import Outcome, execute, run_options
from helmstab.config import RunConfig
from helmstab.inverse import increasing_stability_experiment

REPORT_FILE = "stability.csv"


def _experiment(cfg: RunConfig, out: Path, threads: int | None) -> Outcome:
    report = increasing_stability_experiment(
        cfg.scene.domain, cfg.scene.source, cfg.experiment, threads=threads
    )
    path = out / REPORT_FILE
    path.write_text(report.to_csv())
    summary = report.summary()
    return Outcome(
        artifacts=[path, write_json(out / "stability_summary.json", summary)],
        diagnostics=list(report.diagnostics),
        summary={
            "Ks": [r.K for r in report.rows],
            "total_error": [r.total_error for r in report.rows],
            "M": report.M,
        },
    )


@click.command("sweep-experiment")
@run_options
def sweep_experiment(
    config_path: Path, out: Path | None, seed: int | None, threads: int | None, output_format: str
) -> None:
    """Run sweep, noise, reconstruction and error metrics once per K."""
    execute(
        "sweep-experiment", _experiment, config_path,
        out=out, seed=seed, threads=threads, output_format=output_format,
    )
