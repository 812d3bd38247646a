"""Boundary traces of the radiating field generated by a source pair.

    u(x, k) = (i/4) int H0(k|x - y|) (f1(y) + i k f0(y)) dy

Two evaluation methods give the same numbers:

- ``quadrature`` sums the kernel over each bump's polar grid;
- ``addition`` uses Graf's addition theorem. For a radial bump b around c and
  |x - c| > R the angular integral collapses to
  2 pi H0(k|x - c|) int_0^R J0(k rho) b(rho) rho d rho.

``kind=2`` evaluates the companion field u^- = (-i/4) int H0^(2)(...)(f1 - i k f0),
which equals conj(u) for real k and continues analytically in k.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass

import numpy as np

from helmstab.diagnostics import codes
from helmstab.errors import ConfigError, DomainError
from helmstab.geometry import Domain, SourcePair, gauss_legendre
from helmstab.geometry.source import F1
from helmstab.specfun import bessel_j, hankel1_orders

logger = logging.getLogger(__name__)

_PREFACTOR = {1: 0.25j, 2: -0.25j}


class KernelMethod(enum.Enum):
    ADDITION = "addition"
    QUADRATURE = "quadrature"

    @classmethod
    def parse(cls, value: str | KernelMethod) -> KernelMethod:
        if isinstance(value, cls):
            return value
        try:
            return cls(value)
        except ValueError:
            raise ConfigError(
                f"unknown kernel method {value!r}", notes=["use 'addition' or 'quadrature'"]
            ) from None


@dataclass(frozen=True)
class SectorPoint:
    """Wave number in the sector |arg k| < pi/4, i.e. |Im k| < Re k."""

    k: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "k", complex(self.k))
        check_sector(self.k)

    @property
    def k1(self) -> float:
        return self.k.real

    @property
    def k2(self) -> float:
        return self.k.imag


def check_sector(k: complex) -> complex:
    k = complex(k)
    if not k.real > 0:
        raise DomainError(f"wave number needs a positive real part, got {k}")
    if abs(k.imag) >= k.real:
        raise DomainError(
            f"wave number {k} lies outside the sector |arg k| < pi/4",
            notes=["only real k and the sector |Im k| < Re k are supported"],
        )
    return k


def _hankel01(z: np.ndarray, kind: int) -> tuple[np.ndarray, np.ndarray]:
    if kind == 1:
        h0, h1 = hankel1_orders(1, z)
        return h0, h1
    h0, h1 = hankel1_orders(1, np.conj(z))
    return np.conj(h0), np.conj(h1)


def _channel_factor(channel: int, ks: np.ndarray, kind: int) -> np.ndarray:
    if channel == F1:
        return np.ones_like(ks)
    return 1j * ks if kind == 1 else -1j * ks


def _check_outside(points: np.ndarray, source: SourcePair) -> None:
    for center, radius in source.supports:
        dist = np.linalg.norm(points - np.asarray(center), axis=1)
        if np.any(dist <= radius):
            raise DomainError(
                f"evaluation point inside the support centered at {center}",
                code=codes.SINGULAR_KERNEL,
            )


def radial_moment(bump, ks: np.ndarray, n_radial: int) -> np.ndarray:
    """int_0^R J0(k rho) b(rho) rho d rho for each k."""
    s, w = gauss_legendre(n_radial)
    rho = bump.radius * s
    weights = bump.radius * w * rho * bump.profile(rho)
    return bessel_j(0, ks[:, None] * rho[None, :]) @ weights


def traces(
    points: np.ndarray,
    ks: np.ndarray,
    source: SourcePair,
    *,
    method: KernelMethod | str = KernelMethod.ADDITION,
    kind: int = 1,
) -> tuple[np.ndarray, np.ndarray]:
    """Field and gradient at every (k, point): arrays of shape (m, n) and (m, n, 2)."""
    method = KernelMethod.parse(method)
    points = np.atleast_2d(np.asarray(points, dtype=float))
    ks = np.atleast_1d(np.asarray(ks, dtype=complex))
    if np.any(ks.real <= 0):
        raise DomainError("wave numbers need positive real parts")
    _check_outside(points, source)

    u = np.zeros((ks.size, len(points)), dtype=complex)
    grad = np.zeros((ks.size, len(points), 2), dtype=complex)
    pref = _PREFACTOR[kind]
    for channel, bump in source.channels():
        if bump.amplitude == 0.0:
            continue
        factor = pref * _channel_factor(channel, ks, kind)
        if method is KernelMethod.ADDITION:
            _add_by_addition(u, grad, points, ks, bump, factor, kind, source.density.n_radial)
        else:
            _add_by_quadrature(u, grad, points, ks, bump, factor, kind, source)
    return u, grad


def _add_by_addition(u, grad, points, ks, bump, factor, kind, n_radial) -> None:
    diff = points - np.asarray(bump.center)
    r = np.linalg.norm(diff, axis=1)
    coef = 2.0 * np.pi * radial_moment(bump, ks, n_radial) * factor
    h0, h1 = _hankel01(ks[:, None] * r[None, :], kind)
    u += coef[:, None] * h0
    radial = -(coef * ks)[:, None] * h1
    grad += radial[:, :, None] * (diff / r[:, None])[None, :, :]


def _add_by_quadrature(u, grad, points, ks, bump, factor, kind, source) -> None:
    grid = source.polar_grid(bump)
    fw = bump.evaluate(grid.x, grid.y) * grid.w
    diff = points[:, None, :] - np.stack([grid.x, grid.y], axis=1)[None, :, :]
    dist = np.linalg.norm(diff, axis=2)
    unit = diff / dist[:, :, None]
    for i, k in enumerate(ks):
        h0, h1 = _hankel01(k * dist, kind)
        u[i] += factor[i] * (h0 @ fw)
        grad[i] += -(factor[i] * k) * np.einsum("nq,nqd,q->nd", h1, unit, fw)


def field(x, k, source: SourcePair, *, method: KernelMethod | str = KernelMethod.ADDITION):
    """u(x, k) for real k > 0 or k in the sector |arg k| < pi/4."""
    k = check_sector(k)
    u, _ = traces(np.asarray(x, dtype=float), np.array([k]), source, method=method)
    return complex(u[0, 0])


def grad_field(x, k, source: SourcePair, *, method: KernelMethod | str = KernelMethod.ADDITION):
    """grad_x u(x, k) as a complex 2-vector."""
    k = check_sector(k)
    _, grad = traces(np.asarray(x, dtype=float), np.array([k]), source, method=method)
    return grad[0, 0].copy()


def field_pair(
    points: np.ndarray,
    ks: np.ndarray,
    source: SourcePair,
    *,
    method: KernelMethod | str = KernelMethod.ADDITION,
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """(u+, u-, grad u+, grad u-) on the right half-plane in k."""
    u_plus, g_plus = traces(points, ks, source, method=method, kind=1)
    u_minus, g_minus = traces(points, ks, source, method=method, kind=2)
    return u_plus, u_minus, g_plus, g_minus


def field_growth_bound(k, source: SourcePair, domain: Domain, delta: float) -> float:
    """Pointwise bound on |u(x, k)| for x on the boundary and k in the sector.

    (1/4) e^{|k2| d} / sqrt(k1 delta) * int(|f1| + |k| |f0|), using
    |H0(z)| <= e^{|Im z|} / sqrt(Re z).
    """
    k = check_sector(k)
    mass = source.f1.mass_bound + abs(k) * source.f0.mass_bound
    return 0.25 * np.exp(abs(k.imag) * domain.diameter) / np.sqrt(k.real * delta) * mass
