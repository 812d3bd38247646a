"""The unknown source pair (f0, f1) and its separation from the boundary."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

import numpy as np

from helmstab.diagnostics import codes
from helmstab.errors import GeometryError
from helmstab.geometry.bumps import Bump, BumpSum
from helmstab.geometry.domain import Domain
from helmstab.geometry.grids import InteriorGrid, PolarDensity

F0, F1 = 0, 1


@dataclass(frozen=True)
class SourcePair:
    f0: BumpSum = field(default_factory=BumpSum)
    f1: BumpSum = field(default_factory=BumpSum)
    density: PolarDensity = field(default_factory=PolarDensity)

    @classmethod
    def from_bumps(
        cls,
        domain: Domain,
        f0: Iterable[Bump] = (),
        f1: Iterable[Bump] = (),
        density: PolarDensity | None = None,
    ) -> SourcePair:
        """Build a pair and check that every support sits strictly inside the domain."""
        pair = cls(BumpSum.of(f0), BumpSum.of(f1), density or PolarDensity())
        separation(domain, pair)
        return pair

    def channels(self) -> Iterator[tuple[int, Bump]]:
        """(channel, bump) for every term; channel 0 is f0, 1 is f1."""
        for bump in self.f0.terms:
            yield F0, bump
        for bump in self.f1.terms:
            yield F1, bump

    @property
    def supports(self) -> list[tuple[tuple[float, float], float]]:
        return self.f0.supports + self.f1.supports

    @property
    def is_zero(self) -> bool:
        return self.f0.is_zero and self.f1.is_zero

    def polar_grid(self, bump: Bump, *, refine: int = 1) -> InteriorGrid:
        density = self.density.refined(refine) if refine > 1 else self.density
        return InteriorGrid.polar(bump.center, bump.radius, density)

    def scaled(self, factor: float) -> SourcePair:
        return SourcePair(self.f0.scaled(factor), self.f1.scaled(factor), self.density)

    def with_density(self, density: PolarDensity) -> SourcePair:
        return SourcePair(self.f0, self.f1, density)


def separation(domain: Domain, source: SourcePair) -> float:
    """delta = min over support disks of dist(c, boundary) - R.

    Raises GeometryError when a support touches or crosses the boundary or
    lies outside the domain.
    """
    supports = source.supports
    if not supports:
        return float("inf")
    centers = np.array([c for c, _ in supports])
    radii = np.array([r for _, r in supports])
    outside = ~domain.contains(centers)
    if np.any(outside):
        idx = int(np.argmax(outside))
        raise GeometryError(
            f"support centered at {tuple(centers[idx])} lies outside the domain",
            code=codes.SUPPORT_TOUCHES_BOUNDARY,
        )
    delta = float((domain.boundary_distance(centers) - radii).min())
    if delta <= 0:
        raise GeometryError(
            f"source support touches the boundary (delta = {delta:.6g})",
            notes=["every support disk must stay a positive distance from the boundary"],
        )
    return delta
