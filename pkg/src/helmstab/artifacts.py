"""Artifact files: CSV tables and the run manifest.

Artifacts hold no timestamps, so identical runs produce identical bytes.
"""

from __future__ import annotations

import csv
import hashlib
import json
from collections.abc import Iterable, Sequence
from pathlib import Path

from helmstab import __version__

MANIFEST_NAME = "manifest.json"
MANIFEST_VERSION = 1


def version_string() -> str:
    return f"helmstab-v{__version__}"


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def write_csv(path: Path, header: Sequence[str], rows: Iterable[Sequence]) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_cell(v) for v in row])
    return path


def write_json(path: Path, data: dict) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(data, indent=2, sort_keys=True, default=str) + "\n")
    return path


def sha256_file(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def write_manifest(out_dir: Path, command: str, config: dict, artifacts: list[Path]) -> Path:
    """manifest.json: command, version, config echo and the sha256 of every artifact.

    The manifest is itself a valid config file for the same run.
    """
    manifest = {
        "manifest_version": MANIFEST_VERSION,
        "command": command,
        "version": version_string(),
        "config": config,
        "artifacts": {p.name: sha256_file(p) for p in sorted(artifacts)},
    }
    return write_json(out_dir / MANIFEST_NAME, manifest)
