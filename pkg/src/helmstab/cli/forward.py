"""The `forward` command: synthesize boundary Cauchy data for the configured scene."""

from __future__ import annotations

from pathlib import Path

import click
import numpy as np

from helmstab.cli._shared import Outcome, execute, run_options
from helmstab.config import RunConfig
from helmstab.forward import epsilon_norm, sweep, write_dataset
from helmstab.inverse import add_noise

DATA_FILE = "cauchy_data.csv"


def _forward(cfg: RunConfig, out: Path, threads: int | None) -> Outcome:
    scene = cfg.scene
    grid = cfg.grid.frequency_grid()
    data = sweep(
        scene.domain, scene.source, grid, method=cfg.method, threads=threads, scene_hash=scene.hash
    )
    data = add_noise(data, cfg.noise.level, cfg.noise.seed)
    paths = write_dataset(data, out / DATA_FILE)
    eps2, E = epsilon_norm(data)
    return Outcome(
        artifacts=paths,
        summary={
            "epsilon": float(np.sqrt(eps2)),
            "E": E,
            "frequencies": len(grid),
            "nodes": scene.domain.node_count,
            "noise_level": cfg.noise.level,
        },
    )


@click.command()
@run_options
def forward(
    config_path: Path, out: Path | None, seed: int | None, threads: int | None, output_format: str
) -> None:
    """Sweep the scene over (0, K] and write u, grad u on the boundary."""
    execute(
        "forward", _forward, config_path,
        out=out, seed=seed, threads=threads, output_format=output_format,
    )
