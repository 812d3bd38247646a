"""Interior quadrature grids: per-bump polar grids and composite covering grids."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cache

import numpy as np

from helmstab.errors import ConfigError

DEFAULT_RADIAL = 48
DEFAULT_ANGULAR = 64
DEFAULT_PANEL_ORDER = 8
DEFAULT_PANELS_PER_RADIUS = 4


@cache
def gauss_legendre(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights on [0, 1]."""
    x, w = np.polynomial.legendre.leggauss(n)
    return 0.5 * (x + 1.0), 0.5 * w


@dataclass(frozen=True)
class PolarDensity:
    n_radial: int = DEFAULT_RADIAL
    n_angular: int = DEFAULT_ANGULAR

    def __post_init__(self) -> None:
        if self.n_radial < 4 or self.n_angular < 8:
            raise ConfigError(
                f"polar density too small: {self.n_radial} x {self.n_angular}",
                notes=["need at least 4 radial and 8 angular points"],
            )

    def refined(self, factor: int) -> PolarDensity:
        return PolarDensity(self.n_radial * factor, self.n_angular * factor)


@dataclass(frozen=True, eq=False)
class InteriorGrid:
    """Flattened quadrature nodes (x, y) with weights w.

    ``key`` identifies how the grid was built; two grids are interchangeable
    exactly when their keys match.
    """

    x: np.ndarray
    y: np.ndarray
    w: np.ndarray
    key: tuple = field(default=())

    @classmethod
    def polar(
        cls,
        center: Sequence[float],
        radius: float,
        density: PolarDensity | None = None,
        *,
        inner: float = 0.0,
    ) -> InteriorGrid:
        """Radial Gauss-Legendre x uniform angular grid on the annulus inner < rho < radius."""
        density = density or PolarDensity()
        s, ws = gauss_legendre(density.n_radial)
        rho = inner + (radius - inner) * s
        w_rho = (radius - inner) * ws * rho
        theta = 2.0 * np.pi * np.arange(density.n_angular) / density.n_angular
        w_theta = 2.0 * np.pi / density.n_angular
        rr, tt = np.meshgrid(rho, theta, indexing="ij")
        ww = np.broadcast_to(w_rho[:, None] * w_theta, rr.shape)
        key = ("polar", float(center[0]), float(center[1]), float(radius), float(inner), density)
        return cls(
            x=(center[0] + rr * np.cos(tt)).ravel(),
            y=(center[1] + rr * np.sin(tt)).ravel(),
            w=np.ascontiguousarray(ww).ravel(),
            key=key,
        )

    @classmethod
    def covering(
        cls,
        box: tuple[float, float, float, float],
        panel: float,
        order: int = DEFAULT_PANEL_ORDER,
    ) -> InteriorGrid:
        """Composite Gauss-Legendre tensor grid over box = (xmin, xmax, ymin, ymax)."""
        xmin, xmax, ymin, ymax = box
        if not (xmax > xmin and ymax > ymin and panel > 0):
            raise ConfigError(f"degenerate covering box {box} or panel {panel}")
        xs, wx = _composite(xmin, xmax, panel, order)
        ys, wy = _composite(ymin, ymax, panel, order)
        gx, gy = np.meshgrid(xs, ys, indexing="ij")
        return cls(
            x=gx.ravel(),
            y=gy.ravel(),
            w=np.outer(wx, wy).ravel(),
            key=("covering", tuple(float(b) for b in box), float(panel), int(order)),
        )

    @classmethod
    def covering_supports(
        cls,
        supports: Sequence[tuple[Sequence[float], float]],
        *,
        panels_per_radius: int = DEFAULT_PANELS_PER_RADIUS,
        order: int = DEFAULT_PANEL_ORDER,
    ) -> InteriorGrid:
        """Covering grid over the bounding box of a union of support disks."""
        if not supports:
            raise ConfigError("covering grid needs at least one support disk")
        box = bounding_box(supports)
        panel = min(r for _, r in supports) / panels_per_radius
        return cls.covering(box, panel, order)

    @property
    def size(self) -> int:
        return int(self.w.size)

    def integrate(self, values: np.ndarray) -> float:
        return float(np.dot(self.w, values))

    def matches(self, other: InteriorGrid) -> bool:
        return self.key == other.key

    def contains_disk(self, center: Sequence[float], radius: float) -> bool:
        if self.key[:1] != ("covering",):
            return False
        xmin, xmax, ymin, ymax = self.key[1]
        return (
            center[0] - radius >= xmin
            and center[0] + radius <= xmax
            and center[1] - radius >= ymin
            and center[1] + radius <= ymax
        )


def bounding_box(supports: Sequence[tuple[Sequence[float], float]]) -> tuple[float, ...]:
    return (
        min(c[0] - r for c, r in supports),
        max(c[0] + r for c, r in supports),
        min(c[1] - r for c, r in supports),
        max(c[1] + r for c, r in supports),
    )


def _composite(lo: float, hi: float, panel: float, order: int) -> tuple[np.ndarray, np.ndarray]:
    n_panels = max(1, int(np.ceil((hi - lo) / panel - 1e-9)))
    edges = np.linspace(lo, hi, n_panels + 1)
    s, w = gauss_legendre(order)
    width = np.diff(edges)
    nodes = (edges[:-1, None] + width[:, None] * s[None, :]).ravel()
    weights = (width[:, None] * w[None, :]).ravel()
    return nodes, weights
