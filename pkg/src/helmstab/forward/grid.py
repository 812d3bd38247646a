"""Frequency quadrature grids on (lower, K]."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from helmstab.errors import ConfigError
from helmstab.geometry.grids import gauss_legendre

DEFAULT_POINTS_PER_UNIT = 8
DEFAULT_PANEL_ORDER = 8


@dataclass(frozen=True, eq=False)
class FrequencyGrid:
    """Composite Gauss-Legendre panels over (lower, K].

    Panels have width panel_order / points_per_unit, so there are at least
    points_per_unit nodes per unit of omega.
    """

    K: float
    lower: float = 0.0
    points_per_unit: int = DEFAULT_POINTS_PER_UNIT
    panel_order: int = DEFAULT_PANEL_ORDER
    samples: np.ndarray = field(init=False, repr=False)
    weights: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if not self.K > self.lower >= 0:
            raise ConfigError(f"frequency band ({self.lower}, {self.K}] is empty")
        if self.points_per_unit < 1 or self.panel_order < 1:
            raise ConfigError("points_per_unit and panel_order must be positive")
        width = self.K - self.lower
        n_panels = max(1, int(np.ceil(width * self.points_per_unit / self.panel_order - 1e-9)))
        edges = np.linspace(self.lower, self.K, n_panels + 1)
        s, w = gauss_legendre(self.panel_order)
        span = np.diff(edges)
        object.__setattr__(self, "samples", (edges[:-1, None] + span[:, None] * s).ravel())
        object.__setattr__(self, "weights", (span[:, None] * w).ravel())

    @classmethod
    def band(cls, a: float, b: float, **kwargs) -> FrequencyGrid:
        return cls(K=b, lower=a, **kwargs)

    def __len__(self) -> int:
        return int(self.samples.size)

    def integrate(self, values: np.ndarray) -> np.ndarray:
        """Integral over the band of sampled values (first axis is frequency)."""
        return np.tensordot(self.weights, values, axes=(0, 0))

    def describe(self) -> dict:
        return {
            "K": self.K,
            "lower": self.lower,
            "points_per_unit": self.points_per_unit,
            "panel_order": self.panel_order,
        }

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FrequencyGrid) and self.describe() == other.describe()

    def __hash__(self) -> int:
        return hash(tuple(self.describe().items()))
