"""Finite bump bases standing in for the unknown source pair."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from helmstab.diagnostics import codes
from helmstab.errors import ConditioningError, ConfigError, GeometryError
from helmstab.geometry import (
    Bump,
    BumpSum,
    Domain,
    InteriorGrid,
    PolarDensity,
    SourcePair,
    make_bump,
    separation,
)

GRAM_FLOOR = 1e-10
F0, F1 = 0, 1


@dataclass(frozen=True)
class BasisSpec:
    """count x count bump centers on [-extent, extent]^2, shifted by offset grid steps."""

    count: int = 5
    radius: float = 0.12
    extent: float = 0.5
    offset: float = 0.0

    def __post_init__(self) -> None:
        if self.count < 1:
            raise ConfigError(f"basis count must be positive, got {self.count}")
        if not self.radius > 0 or self.extent < 0:
            raise ConfigError("basis radius must be positive and extent nonnegative")

    @property
    def step(self) -> float:
        return 2.0 * self.extent / (self.count - 1) if self.count > 1 else 0.0

    def centers(self) -> np.ndarray:
        axis = np.linspace(-self.extent, self.extent, self.count) + self.offset * self.step
        gx, gy = np.meshgrid(axis, axis, indexing="ij")
        return np.stack([gx.ravel(), gy.ravel()], axis=1)


@dataclass(frozen=True)
class SourceBasis:
    """Unit bumps for each channel; coefficient vectors are stacked (c0, c1)."""

    f0_elements: tuple[Bump, ...]
    f1_elements: tuple[Bump, ...]
    density: PolarDensity = PolarDensity()

    @property
    def n0(self) -> int:
        return len(self.f0_elements)

    @property
    def n1(self) -> int:
        return len(self.f1_elements)

    @property
    def size(self) -> int:
        return self.n0 + self.n1

    def columns(self) -> list[tuple[int, Bump]]:
        return [(F0, b) for b in self.f0_elements] + [(F1, b) for b in self.f1_elements]

    def element_source(self, j: int) -> SourcePair:
        channel, bump = self.columns()[j]
        single = BumpSum((bump,))
        if channel == F0:
            return SourcePair(f0=single, density=self.density)
        return SourcePair(f1=single, density=self.density)

    def fields(self, coefficients: np.ndarray) -> SourcePair:
        c = np.asarray(coefficients, dtype=float)
        if c.shape != (self.size,):
            raise ConfigError(f"expected {self.size} coefficients, got shape {c.shape}")
        c0, c1 = c[: self.n0], c[self.n0 :]
        f0 = BumpSum(tuple(b.scaled(a) for b, a in zip(self.f0_elements, c0, strict=True)))
        f1 = BumpSum(tuple(b.scaled(a) for b, a in zip(self.f1_elements, c1, strict=True)))
        return SourcePair(f0, f1, self.density)

    def snap(self, truth: SourcePair) -> tuple[SourcePair, np.ndarray]:
        """Replace each true bump by the nearest basis element with the same amplitude.

        The snapped pair carries only the elements with a nonzero coefficient.
        """
        coeffs = np.zeros(self.size)
        for channel, bump in truth.channels():
            elements = self.f0_elements if channel == F0 else self.f1_elements
            base = 0 if channel == F0 else self.n0
            centers = np.array([b.center for b in elements])
            j = int(np.argmin(np.linalg.norm(centers - np.asarray(bump.center), axis=1)))
            coeffs[base + j] += bump.amplitude
        c0, c1 = coeffs[: self.n0], coeffs[self.n0 :]
        f0 = BumpSum(tuple(b.scaled(a) for b, a in zip(self.f0_elements, c0, strict=True) if a))
        f1 = BumpSum(tuple(b.scaled(a) for b, a in zip(self.f1_elements, c1, strict=True) if a))
        return SourcePair(f0, f1, self.density), coeffs

    def gram_floor(self) -> float:
        """Smallest singular value of the L2 Gram matrix of one channel's elements."""
        elements = self.f1_elements or self.f0_elements
        if not elements:
            return 0.0
        grid = InteriorGrid.covering_supports(
            [(b.center, b.radius) for b in elements], panels_per_radius=2
        )
        values = np.stack([b.evaluate(grid.x, grid.y) for b in elements])
        gram = (values * grid.w) @ values.T
        return float(np.linalg.svd(gram, compute_uv=False).min())


def make_basis(
    domain: Domain, spec: BasisSpec, density: PolarDensity | None = None
) -> SourceBasis:
    """The same grid of unit bumps in both channels, checked against the boundary."""
    bumps = tuple(make_bump(c, spec.radius) for c in spec.centers())
    basis = SourceBasis(bumps, bumps, density or PolarDensity())
    try:
        separation(domain, SourcePair(f1=BumpSum(bumps)))
    except GeometryError as exc:
        raise GeometryError(
            f"basis grid does not fit inside the domain: {exc.message}",
            code=exc.code,
            notes=["reduce basis.extent or basis.radius"],
        ) from exc
    floor = basis.gram_floor()
    if floor <= GRAM_FLOOR:
        raise ConditioningError(
            f"basis elements are nearly dependent (Gram floor {floor:.3e})",
            code=codes.ILL_CONDITIONED_BASIS,
        )
    return basis
