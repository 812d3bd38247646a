"""Cauchy data sets: storage, the data norm, and CSV persistence."""

from __future__ import annotations

import csv
import json
import logging
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from helmstab.diagnostics import codes
from helmstab.errors import AccuracyError, ConfigError
from helmstab.forward.grid import FrequencyGrid
from helmstab.geometry import Domain

logger = logging.getLogger(__name__)

EPSILON_FLOOR = 1e-300
DATA_HEADER = ("omega", "node_index", "re_u", "im_u", "re_ux", "im_ux", "re_uy", "im_uy")


@dataclass(frozen=True)
class NoiseInfo:
    level: float
    seed: int
    # per-array standard deviation of the complex perturbation, for (u, ux, uy)
    sigmas: tuple[float, float, float] = (0.0, 0.0, 0.0)

    def to_dict(self) -> dict:
        return {"level": self.level, "seed": self.seed, "sigmas": list(self.sigmas)}

    @classmethod
    def from_dict(cls, raw: dict) -> NoiseInfo:
        return cls(float(raw["level"]), int(raw["seed"]), tuple(float(s) for s in raw["sigmas"]))


@dataclass(frozen=True, eq=False)
class CauchyDataSet:
    """u and grad u at every (frequency, boundary node)."""

    grid: FrequencyGrid
    domain: Domain
    u: np.ndarray
    grad: np.ndarray
    noise: NoiseInfo | None = None
    scene_hash: str = ""

    def __post_init__(self) -> None:
        shape = (len(self.grid), self.domain.node_count)
        if self.u.shape != shape or self.grad.shape != shape + (2,):
            raise ConfigError(
                f"data shape {self.u.shape}/{self.grad.shape} does not match grid x nodes {shape}",
                code=codes.GRID_MISMATCH,
            )
        if not (np.all(np.isfinite(self.u)) and np.all(np.isfinite(self.grad))):
            raise AccuracyError("Cauchy data contains non-finite entries")

    @property
    def is_empty(self) -> bool:
        return self.u.size == 0

    def replace(self, *, u=None, grad=None, noise=None) -> CauchyDataSet:
        return CauchyDataSet(
            grid=self.grid,
            domain=self.domain,
            u=self.u if u is None else u,
            grad=self.grad if grad is None else grad,
            noise=noise if noise is not None else self.noise,
            scene_hash=self.scene_hash,
        )

    def scaled(self, factor: float) -> CauchyDataSet:
        return self.replace(u=self.u * factor, grad=self.grad * factor)


def epsilon_norm(data: CauchyDataSet) -> tuple[float, float]:
    """(eps^2, E) with eps^2 = sum_w w_w sum_x w_x (w^2 |u|^2 + |grad u|^2) and E = -ln eps."""
    if data.is_empty:
        raise ConfigError("cannot take the data norm of an empty dataset")
    omega = data.grid.samples
    density = (omega**2)[:, None] * np.abs(data.u) ** 2 + np.sum(np.abs(data.grad) ** 2, axis=2)
    eps2 = float(data.grid.weights @ (density @ data.domain.weights))
    eps = max(np.sqrt(eps2), EPSILON_FLOOR)
    return eps2, float(-np.log(eps))


def sidecar_path(csv_path: Path) -> Path:
    return csv_path.with_suffix(".json")


def write_dataset(data: CauchyDataSet, csv_path: Path) -> list[Path]:
    """CSV of traces plus a JSON sidecar describing grid, domain and noise."""
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(DATA_HEADER)
        for i, omega in enumerate(data.grid.samples):
            for j in range(data.domain.node_count):
                u, (ux, uy) = data.u[i, j], data.grad[i, j]
                parts = (u.real, u.imag, ux.real, ux.imag, uy.real, uy.imag)
                writer.writerow([format(omega, ".17g"), j] + [format(v, ".17g") for v in parts])
    meta = {
        "grid": data.grid.describe(),
        "domain": data.domain.description,
        "nodes": data.domain.node_count,
        "noise": data.noise.to_dict() if data.noise else None,
        "scene_hash": data.scene_hash,
    }
    side = sidecar_path(csv_path)
    side.write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n")
    return [csv_path, side]


def read_dataset(csv_path: Path, domain: Domain) -> CauchyDataSet:
    side = sidecar_path(csv_path)
    if not side.exists():
        raise ConfigError(f"missing sidecar {side.name} for {csv_path.name}")
    meta = json.loads(side.read_text())
    grid = FrequencyGrid(**meta["grid"])
    if meta["nodes"] != domain.node_count:
        raise ConfigError(
            f"dataset has {meta['nodes']} nodes, domain has {domain.node_count}",
            code=codes.GRID_MISMATCH,
        )
    raw = np.loadtxt(csv_path, delimiter=",", skiprows=1, ndmin=2)
    n_nodes = domain.node_count
    if raw.shape[0] != len(grid) * n_nodes:
        raise ConfigError(f"{csv_path.name} has {raw.shape[0]} rows", code=codes.GRID_MISMATCH)
    omega = raw[::n_nodes, 0]
    if not np.array_equal(omega, grid.samples):
        raise ConfigError(
            "frequencies in the data file do not match its grid", code=codes.GRID_MISMATCH
        )
    vals = raw[:, 2:].reshape(len(grid), n_nodes, 6)
    u = vals[..., 0] + 1j * vals[..., 1]
    grad = np.stack([vals[..., 2] + 1j * vals[..., 3], vals[..., 4] + 1j * vals[..., 5]], axis=2)
    noise = NoiseInfo.from_dict(meta["noise"]) if meta.get("noise") else None
    logger.info("loaded %d traces from %s", raw.shape[0], csv_path)
    return CauchyDataSet(grid, domain, u, grad, noise, meta.get("scene_hash", ""))
