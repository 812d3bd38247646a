"""Run log: one JSON line per CLI invocation, in daily files per working directory.

Entries carry a timestamp; artifacts never do. Files older than the retention
window are pruned at the start of each run.
"""

from __future__ import annotations

import contextlib
import json
import os
from collections.abc import Iterator
from dataclasses import asdict, dataclass, field
from datetime import UTC, date, datetime, timedelta
from pathlib import Path

DEFAULT_RETENTION_DAYS = 30
_LOG_ROOT = Path.home() / ".helmstab" / "logs"
_DATE_FORMAT = "%Y-%m-%d"


@dataclass(frozen=True)
class RunRecord:
    command: str
    config_hash: str | None = None
    seed: int | None = None
    exit_status: int = 0
    duration_ms: float | None = None
    artifacts: list[str] = field(default_factory=list)
    diagnostics: list[str] = field(default_factory=list)
    ts: str = field(default_factory=lambda: datetime.now(UTC).isoformat())

    def to_json(self) -> str:
        return json.dumps(asdict(self), default=str)


def _project_slug() -> str:
    """The working directory as a single path component."""
    return os.getcwd().replace("/", "-").lstrip("-")


def _project_dir() -> Path:
    return _LOG_ROOT / _project_slug()


def _dated_files(directory: Path) -> Iterator[tuple[date, Path]]:
    """(day, path) for every log file; files not named by date are skipped."""
    for path in directory.glob("*.jsonl"):
        try:
            day = datetime.strptime(path.stem, _DATE_FORMAT).date()
        except ValueError:
            continue
        yield day, path


def log_run(
    *,
    command: str,
    config_hash: str | None = None,
    seed: int | None = None,
    exit_status: int = 0,
    duration_ms: float | None = None,
    artifacts: list[str] | None = None,
    diagnostics: list[str] | None = None,
) -> None:
    record = RunRecord(
        command=command,
        config_hash=config_hash,
        seed=seed,
        exit_status=exit_status,
        duration_ms=duration_ms,
        artifacts=list(artifacts or []),
        diagnostics=list(diagnostics or []),
    )
    target = _project_dir() / f"{datetime.now(UTC).strftime(_DATE_FORMAT)}.jsonl"
    # a failed log write never fails the run
    with contextlib.suppress(OSError):
        target.parent.mkdir(parents=True, exist_ok=True)
        with target.open("a") as fh:
            fh.write(record.to_json() + "\n")


def cleanup_old_logs(*, retention_days: int = DEFAULT_RETENTION_DAYS) -> int:
    """Remove this project's log files older than retention_days; return how many."""
    directory = _project_dir()
    if not directory.is_dir():
        return 0
    cutoff = (datetime.now(UTC) - timedelta(days=retention_days)).date()
    removed = 0
    for day, path in _dated_files(directory):
        if day < cutoff:
            with contextlib.suppress(OSError):
                path.unlink()
                removed += 1
    with contextlib.suppress(OSError):
        directory.rmdir()
    return removed
