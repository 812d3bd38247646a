"""Shared run plumbing: common options, config loading, error mapping and run logging."""

from __future__ import annotations

import contextlib
import logging
import time
from collections.abc import Callable
from dataclasses import dataclass, field
from pathlib import Path

import click

from helmstab.artifacts import write_manifest
from helmstab.cli._output import emit_error, format_report
from helmstab.config import RunConfig, load_config
from helmstab.diagnostics import Diagnostic, DiagnosticReport, codes
from helmstab.errors import EXIT_ACCURACY, EXIT_OK, ConfigError, HelmstabError
from helmstab.runlog import cleanup_old_logs, log_run

logger = logging.getLogger(__name__)


@dataclass
class Outcome:
    """What a command body produced."""

    artifacts: list[Path] = field(default_factory=list)
    diagnostics: list[Diagnostic] = field(default_factory=list)
    summary: dict = field(default_factory=dict)


Body = Callable[[RunConfig, Path, int | None], Outcome]


def run_options(fn):
    """--config/--out/--seed/--threads/--format, shared by every run command."""
    fn = click.option(
        "--format",
        "output_format",
        type=click.Choice(["json", "text"]),
        default="json",
        help="Output format.",
    )(fn)
    fn = click.option(
        "--threads",
        type=click.IntRange(min=1),
        default=None,
        help="Worker threads (never changes results).",
    )(fn)
    fn = click.option("--seed", type=int, default=None, help="Override noise.seed.")(fn)
    fn = click.option(
        "--out",
        type=click.Path(path_type=Path, file_okay=False),
        default=None,
        help="Output directory (overrides output.directory).",
    )(fn)
    fn = click.option(
        "--config",
        "config_path",
        type=click.Path(path_type=Path, dir_okay=False),
        required=True,
        help="Run config (.toml, .json, or a manifest.json).",
    )(fn)
    return fn


def load_run_config(
    config_path: Path,
    *,
    out: Path | None = None,
    seed: int | None = None,
    inverse_crime: bool | None = None,
) -> RunConfig:
    cfg = load_config(config_path)
    if out is None and seed is None and inverse_crime is None:
        return cfg
    return cfg.with_overrides(seed=seed, out=out, inverse_crime=inverse_crime)


def execute(
    command: str,
    body: Body,
    config_path: Path,
    *,
    out: Path | None,
    seed: int | None,
    threads: int | None,
    output_format: str,
    inverse_crime: bool | None = None,
) -> None:
    """Load config, run the body, write the manifest, emit the report and log the run.

    Exit status: 0 success, 3 when an accuracy check in the body failed, or the
    status of the HelmstabError that aborted the run.
    """
    start = time.perf_counter()
    with contextlib.suppress(OSError):
        cleanup_old_logs()

    cfg: RunConfig | None = None
    report = DiagnosticReport()
    status = EXIT_OK
    try:
        try:
            cfg = load_run_config(config_path, out=out, seed=seed, inverse_crime=inverse_crime)
            out_dir = cfg.output.directory
            out_dir.mkdir(parents=True, exist_ok=True)
            outcome = body(cfg, out_dir, threads)
            manifest = write_manifest(out_dir, command, cfg.raw, outcome.artifacts)
        except OSError as exc:
            raise ConfigError(f"cannot write artifacts: {exc}") from exc
        report = DiagnosticReport(artifacts=[str(p) for p in [*outcome.artifacts, manifest]])
        report.extend(outcome.diagnostics)
        report.add(
            Diagnostic.info(codes.ARTIFACT_WRITTEN, f"{len(report.artifacts)} artifacts written")
        )
        status = EXIT_ACCURACY if report.failed else EXIT_OK
        click.echo(
            format_report(
                report, command=command, summary=outcome.summary, output_format=output_format
            )
        )
    except HelmstabError as exc:
        logger.info("%s failed: %s", command, exc.message)
        report = DiagnosticReport([exc.to_diagnostic()])
        status = exc.exit_status
        emit_error(report, command=command)
    finally:
        log_run(
            command=command,
            config_hash=cfg.hash if cfg else None,
            seed=cfg.noise.seed if cfg else seed,
            exit_status=status,
            duration_ms=(time.perf_counter() - start) * 1000.0,
            artifacts=list(report.artifacts),
            diagnostics=report.codes(),
        )
    if status != EXIT_OK:
        raise SystemExit(status)


def check_nodes(cfg: RunConfig, nodes) -> list[int]:
    count = cfg.scene.domain.node_count
    bad = [n for n in nodes if not 0 <= n < count]
    if bad:
        raise ConfigError(
            f"boundary node index {bad[0]} out of range", notes=[f"the domain has {count} nodes"]
        )
    return list(nodes)


__all__ = ["Outcome", "check_nodes", "execute", "load_run_config", "run_options"]
