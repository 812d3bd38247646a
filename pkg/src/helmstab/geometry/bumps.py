"""Compactly supported polynomial bumps and their finite sums.

A bump is A (1 - |x - c|^2 / R^2)^5 inside the disk |x - c| < R and zero
outside. In local coordinates u = (x - c) / R it is a bivariate polynomial,
so every partial derivative is again a polynomial, obtained exactly with
``numpy.polynomial.polynomial.polyder``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cache
from math import factorial

import numpy as np
from numpy.polynomial import polynomial as P

from helmstab.errors import ConfigError

BUMP_POWER = 5
MAX_DERIVATIVE = 4

# Integral of (1 - |u|^2)^5 over the unit disk.
UNIT_BUMP_MASS = np.pi / (BUMP_POWER + 1)


@cache
def _coefficients(a1: int, a2: int) -> np.ndarray:
    """Coefficients of d^a1/du1^a1 d^a2/du2^a2 (1 - u1^2 - u2^2)^5."""
    n = BUMP_POWER
    coeffs = np.zeros((2 * n + 1, 2 * n + 1))
    for q in range(n + 1):
        for r in range(n + 1 - q):
            multinomial = factorial(n) // (factorial(n - q - r) * factorial(q) * factorial(r))
            coeffs[2 * q, 2 * r] = multinomial * (-1) ** (q + r)
    if a1:
        coeffs = P.polyder(coeffs, m=a1, axis=0)
    if a2:
        coeffs = P.polyder(coeffs, m=a2, axis=1)
    coeffs.setflags(write=False)
    return coeffs


def multi_indices(order: int) -> list[tuple[int, int]]:
    """All (a1, a2) with a1 + a2 == order."""
    return [(order - j, j) for j in range(order + 1)]


def _check_alpha(alpha: tuple[int, int]) -> None:
    if min(alpha) < 0 or sum(alpha) > MAX_DERIVATIVE:
        raise ConfigError(f"derivative order {alpha} outside 0..{MAX_DERIVATIVE}")


@dataclass(frozen=True)
class Bump:
    center: tuple[float, float]
    radius: float
    amplitude: float = 1.0

    def __post_init__(self) -> None:
        if not self.radius > 0:
            raise ConfigError(f"bump radius must be positive, got {self.radius}")
        object.__setattr__(self, "center", (float(self.center[0]), float(self.center[1])))

    def local(self, x: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        return (x - self.center[0]) / self.radius, (y - self.center[1]) / self.radius

    def evaluate(self, x, y, alpha: tuple[int, int] = (0, 0)) -> np.ndarray:
        """Partial derivative ``alpha`` of the bump at (x, y); zero outside the support."""
        _check_alpha(alpha)
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        u1, u2 = self.local(x, y)
        inside = u1 * u1 + u2 * u2 < 1.0
        out = np.zeros(np.broadcast(u1, u2).shape)
        if np.any(inside):
            u1b, u2b = np.broadcast_arrays(u1, u2)
            scale = self.amplitude * self.radius ** (-(alpha[0] + alpha[1]))
            out[inside] = scale * P.polyval2d(u1b[inside], u2b[inside], _coefficients(*alpha))
        return out

    def profile(self, rho) -> np.ndarray:
        """Radial profile A (1 - rho^2/R^2)^5 for 0 <= rho < R."""
        t = np.asarray(rho, dtype=float) / self.radius
        return np.where(t < 1.0, self.amplitude * (1.0 - t * t) ** BUMP_POWER, 0.0)

    @property
    def mass(self) -> float:
        """Integral of |b| over the plane."""
        return abs(self.amplitude) * UNIT_BUMP_MASS * self.radius**2

    def scaled(self, factor: float) -> Bump:
        return Bump(self.center, self.radius, self.amplitude * factor)


def make_bump(center: Sequence[float], radius: float, amplitude: float = 1.0) -> Bump:
    return Bump((center[0], center[1]), radius, amplitude)


@dataclass(frozen=True)
class BumpSum:
    """Finite sum of bumps. The empty sum is the zero field."""

    terms: tuple[Bump, ...] = ()

    @classmethod
    def of(cls, bumps: Iterable[Bump]) -> BumpSum:
        return cls(tuple(bumps))

    def evaluate(self, x, y, alpha: tuple[int, int] = (0, 0)) -> np.ndarray:
        _check_alpha(alpha)
        shape = np.broadcast(np.asarray(x), np.asarray(y)).shape
        out = np.zeros(shape)
        for bump in self.terms:
            out = out + bump.evaluate(x, y, alpha)
        return out

    def __call__(self, x, y) -> np.ndarray:
        return self.evaluate(x, y)

    @property
    def supports(self) -> list[tuple[tuple[float, float], float]]:
        return [(b.center, b.radius) for b in self.terms]

    @property
    def is_zero(self) -> bool:
        return all(b.amplitude == 0.0 for b in self.terms)

    @property
    def mass_bound(self) -> float:
        """Upper bound for the integral of |f| (exact for disjoint supports)."""
        return float(sum(b.mass for b in self.terms))

    def scaled(self, factor: float) -> BumpSum:
        return BumpSum(tuple(b.scaled(factor) for b in self.terms))

    def __add__(self, other: BumpSum) -> BumpSum:
        return BumpSum(self.terms + other.terms)

    def __sub__(self, other: BumpSum) -> BumpSum:
        return self + other.scaled(-1.0)

    def __neg__(self) -> BumpSum:
        return self.scaled(-1.0)

    def __mul__(self, factor: float) -> BumpSum:
        return self.scaled(float(factor))

    __rmul__ = __mul__
