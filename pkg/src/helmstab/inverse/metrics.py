"""Reconstruction errors in the norms of the stability estimate."""

from __future__ import annotations

import numpy as np

from helmstab.diagnostics import codes
from helmstab.errors import ConfigError
from helmstab.geometry import BumpSum, InteriorGrid, SourcePair, make_bump, sobolev_norms


def _collect(field: BumpSum) -> BumpSum:
    """Merge terms sharing a support so that exact cancellations vanish."""
    amplitudes: dict[tuple[float, float, float], float] = {}
    for bump in field.terms:
        key = (float(bump.center[0]), float(bump.center[1]), float(bump.radius))
        amplitudes[key] = amplitudes.get(key, 0.0) + bump.amplitude
    return BumpSum(
        tuple(make_bump((x, y), r, a) for (x, y, r), a in amplitudes.items() if a != 0.0)
    )


def _check_grid(grid: InteriorGrid, *fields: BumpSum) -> None:
    for field in fields:
        for center, radius in field.supports:
            if not grid.contains_disk(center, radius):
                raise ConfigError(
                    f"interior grid does not cover the support at {center} (radius {radius})",
                    code=codes.GRID_MISMATCH,
                    notes=["error metrics need a covering grid over every support"],
                )


def error_metrics(
    fields: SourcePair, truth: SourcePair, grid: InteriorGrid | None = None
) -> tuple[float, float]:
    """(||f0_rec - f0||_(1), ||f1_rec - f1||_(0))."""
    diff0 = _collect(fields.f0 - truth.f0)
    diff1 = _collect(fields.f1 - truth.f1)
    if grid is not None:
        _check_grid(grid, fields.f0, fields.f1, truth.f0, truth.f1)
    err0 = sobolev_norms(diff0, 1, grid)[1]
    err1 = sobolev_norms(diff1, 0, grid)[0]
    return err0, err1


def coefficient_error(coefficients: np.ndarray, expected: np.ndarray) -> float:
    """Relative l2 error, absolute when the expected vector is zero."""
    c, e = np.asarray(coefficients, dtype=float), np.asarray(expected, dtype=float)
    if c.shape != e.shape:
        raise ConfigError(f"coefficient shapes differ: {c.shape} vs {e.shape}")
    scale = float(np.linalg.norm(e))
    err = float(np.linalg.norm(c - e))
    return err / scale if scale > 0 else err
