"""Bessel and Hankel functions of integer order 0-3 for Re z > 0.

Three evaluation regimes share the work:

- power series (|z| < 12, Im z <= 4): J from its series plus Miller
  recurrence, Y from its logarithmic series plus forward recurrence;
- Laplace integral (|z| < 12, Im z > 4), where J + iY would cancel;
- asymptotic expansion (|z| >= 12).

Every public function accepts a Python complex or a numpy array and returns
the same kind.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from typing import Literal

import numpy as np

from helmstab.diagnostics import codes
from helmstab.errors import ConfigError, DomainError, RangeError
from helmstab.specfun import _asymptotic, _integral, _series

logger = logging.getLogger(__name__)

HankelOrder = Literal[0, 1, 2, 3]
MAX_ORDER = 3

SERIES_THRESHOLD = 12.0
LAPLACE_IMAG_THRESHOLD = 4.0
Z_CAP = 1e4
IMAG_CAP = 700.0


class RegimeKind(enum.Enum):
    POWER_SERIES = "power-series"
    LAPLACE_INTEGRAL = "laplace-integral"
    ASYMPTOTIC = "asymptotic"


@dataclass(frozen=True)
class EvalRegime:
    kind: RegimeKind
    threshold: float = SERIES_THRESHOLD

    def __post_init__(self) -> None:
        if not self.threshold > 0:
            raise ConfigError(f"regime threshold must be positive, got {self.threshold}")


def regime_for(z: complex) -> EvalRegime:
    """The regime a scalar argument is evaluated in."""
    if abs(z) >= SERIES_THRESHOLD:
        return EvalRegime(RegimeKind.ASYMPTOTIC)
    if z.imag > LAPLACE_IMAG_THRESHOLD:
        return EvalRegime(RegimeKind.LAPLACE_INTEGRAL)
    return EvalRegime(RegimeKind.POWER_SERIES)


def check_order(order: int) -> int:
    if isinstance(order, bool) or not isinstance(order, int | np.integer):
        raise ConfigError(f"Hankel order must be an integer, got {order!r}", code=codes.UNSUPPORTED)
    if not 0 <= order <= MAX_ORDER:
        raise ConfigError(
            f"Hankel order {order} not supported",
            code=codes.UNSUPPORTED,
            notes=["supported orders are 0, 1, 2, 3"],
        )
    return int(order)


def _prepare(z) -> tuple[np.ndarray, bool]:
    arr = np.asarray(z, dtype=complex)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    if not np.all(np.isfinite(arr)):
        raise DomainError("argument must be finite")
    if np.any(arr.real <= 0):
        bad = arr[arr.real <= 0].flat[0]
        raise DomainError(f"argument must have positive real part, got {complex(bad)}")
    if np.any(np.abs(arr) > Z_CAP):
        raise RangeError(f"|z| exceeds the cap {Z_CAP:g}")
    if np.any(np.abs(arr.imag) > IMAG_CAP):
        raise RangeError(f"|Im z| exceeds {IMAG_CAP:g}; exp(|Im z|) would overflow")
    return arr, scalar


def _finish(values: np.ndarray, scalar: bool):
    return complex(values[0]) if scalar else values


def _recur(max_order: int, z: np.ndarray, h0: np.ndarray, h1: np.ndarray) -> list[np.ndarray]:
    out = [h0, h1]
    for n in range(1, max_order):
        out.append((2.0 * n / z) * out[n] - out[n - 1])
    return out[: max_order + 1]


def _series_jy(max_order: int, z: np.ndarray) -> tuple[list[np.ndarray], list[np.ndarray]]:
    j0, j1 = _series.j0_j1(z)
    y0, y1 = _series.y0_y1(z, j0, j1)
    js = _series.miller_j(max(max_order, 1), z, j0, j1)
    ys = _series.forward_y(max(max_order, 1), z, y0, y1)
    return js, ys


def _hankel_by_kind(max_order: int, z: np.ndarray, kind: RegimeKind) -> list[np.ndarray]:
    if kind is RegimeKind.POWER_SERIES:
        js, ys = _series_jy(max_order, z)
        return [j + 1j * y for j, y in zip(js, ys, strict=True)][: max_order + 1]
    if kind is RegimeKind.LAPLACE_INTEGRAL:
        h0 = _integral.hankel1_integral(0, z)
        h1 = _integral.hankel1_integral(1, z)
    else:
        h0 = _asymptotic.hankel1_asymptotic(0, z)
        h1 = _asymptotic.hankel1_asymptotic(1, z)
    return _recur(max_order, z, h0, h1)


def hankel1_orders(max_order: int, z: np.ndarray) -> list[np.ndarray]:
    """H^(1)_0 .. H^(1)_max_order on an array, each regime evaluated once."""
    max_order = check_order(max_order)
    arr, _ = _prepare(z)
    small = np.abs(arr) < SERIES_THRESHOLD
    laplace = small & (arr.imag > LAPLACE_IMAG_THRESHOLD)
    masks = {
        RegimeKind.POWER_SERIES: small & ~laplace,
        RegimeKind.LAPLACE_INTEGRAL: laplace,
        RegimeKind.ASYMPTOTIC: ~small,
    }
    out = [np.empty(arr.shape, dtype=complex) for _ in range(max_order + 1)]
    for kind, mask in masks.items():
        if not np.any(mask):
            continue
        for slot, values in zip(out, _hankel_by_kind(max_order, arr[mask], kind), strict=True):
            slot[mask] = values
    return out


def hankel1(order: HankelOrder, z):
    """H^(1)_order(z) = J_order(z) + i Y_order(z)."""
    order = check_order(order)
    arr, scalar = _prepare(z)
    return _finish(hankel1_orders(order, arr)[order], scalar)


def hankel1_in_regime(order: HankelOrder, z, kind: RegimeKind):
    """H^(1)_order evaluated in a forced regime, for cross-validating regimes."""
    order = check_order(order)
    arr, scalar = _prepare(z)
    return _finish(_hankel_by_kind(order, arr, kind)[order], scalar)


def hankel2(order: HankelOrder, z):
    """H^(2)_order(z) = conj(H^(1)_order(conj z)) for integer order and Re z > 0."""
    order = check_order(order)
    arr, scalar = _prepare(z)
    return _finish(np.conj(hankel1_orders(order, np.conj(arr))[order]), scalar)


def hankel1_derivative(order: HankelOrder, z):
    """dH^(1)_order/dz from H_{n-1} - (n/z) H_n (and -H_1 for n = 0)."""
    order = check_order(order)
    arr, scalar = _prepare(z)
    if order == 0:
        return _finish(-hankel1_orders(1, arr)[1], scalar)
    hs = hankel1_orders(order, arr)
    return _finish(hs[order - 1] - (order / arr) * hs[order], scalar)


def _large_pair(order: int, arr: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    h1 = hankel1_orders(order, arr)[order]
    h2 = np.conj(hankel1_orders(order, np.conj(arr))[order])
    return h1, h2


def bessel_j(order: HankelOrder, z):
    """J_order(z)."""
    order = check_order(order)
    arr, scalar = _prepare(z)
    out = np.empty(arr.shape, dtype=complex)
    small = np.abs(arr) < SERIES_THRESHOLD
    if np.any(small):
        out[small] = _series_jy(order, arr[small])[0][order]
    if np.any(~small):
        h1, h2 = _large_pair(order, arr[~small])
        out[~small] = 0.5 * (h1 + h2)
    return _finish(out, scalar)


def bessel_y(order: HankelOrder, z):
    """Y_order(z), principal branch of the logarithm."""
    order = check_order(order)
    arr, scalar = _prepare(z)
    out = np.empty(arr.shape, dtype=complex)
    small = np.abs(arr) < SERIES_THRESHOLD
    if np.any(small):
        out[small] = _series_jy(order, arr[small])[1][order]
    if np.any(~small):
        h1, h2 = _large_pair(order, arr[~small])
        out[~small] = (h1 - h2) / 2j
    return _finish(out, scalar)
