"""Discrete Sobolev norms of bump fields.

||f||_(s)^2 = sum over |alpha| <= s of ||d^alpha f||^2_{L2}.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from helmstab.diagnostics import codes
from helmstab.errors import ConfigError
from helmstab.geometry.bumps import MAX_DERIVATIVE, BumpSum, multi_indices
from helmstab.geometry.grids import InteriorGrid, PolarDensity


def sobolev_norms(
    field: BumpSum,
    max_order: int,
    grid: InteriorGrid | None = None,
    *,
    density: PolarDensity | None = None,
) -> tuple[float, ...]:
    """Norms ||f||_(0) .. ||f||_(max_order).

    Without an explicit grid a single bump is integrated on its own polar grid
    (exact for these polynomial integrands); sums use a covering grid over
    the union of supports.
    """
    if not 0 <= max_order <= MAX_DERIVATIVE:
        raise ConfigError(
            f"sobolev order {max_order} not supported", code=codes.UNSUPPORTED,
            notes=[f"orders 0..{MAX_DERIVATIVE} are available"],
        )
    if not field.terms:
        return (0.0,) * (max_order + 1)
    if grid is None:
        if len(field.terms) == 1:
            bump = field.terms[0]
            grid = InteriorGrid.polar(bump.center, bump.radius, density)
        else:
            grid = InteriorGrid.covering_supports(field.supports)

    squares = []
    for order in range(max_order + 1):
        total = 0.0
        for alpha in multi_indices(order):
            values = field.evaluate(grid.x, grid.y, alpha)
            total += grid.integrate(values * values)
        squares.append(total)
    return tuple(float(np.sqrt(v)) for v in np.cumsum(squares))


@dataclass(frozen=True)
class SobolevBudget:
    """Smoothness budget M with ||f0||_(4)^2 + ||f1||_(3)^2 <= M^2 and M >= 1."""

    M: float
    f0_norms: tuple[float, ...]
    f1_norms: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.M < 1:
            raise ConfigError(f"M must be at least 1, got {self.M}")
        need = self.f0_norms[4] ** 2 + self.f1_norms[3] ** 2
        if need > self.M**2 * (1 + 1e-12):
            raise ConfigError(f"M = {self.M} below the norm budget sqrt({need:.6g})")

    @classmethod
    def of(cls, source) -> SobolevBudget:
        f0 = sobolev_norms(source.f0, 4)
        f1 = sobolev_norms(source.f1, 3)
        return cls(max(1.0, float(np.sqrt(f0[4] ** 2 + f1[3] ** 2))), f0, f1)

    @property
    def smoothness_square(self) -> float:
        """||f0||_(4)^2 + ||f1||_(3)^2."""
        return self.f0_norms[4] ** 2 + self.f1_norms[3] ** 2
