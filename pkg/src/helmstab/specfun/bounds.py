"""Pointwise upper bounds for |H^(1)_0(z)| in the right half-plane."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from helmstab.diagnostics import Diagnostic, codes
from helmstab.errors import DomainError
from helmstab.specfun.hankel import _prepare, hankel1_orders

# Weber-type inequality needs r = |z| above this.
WEBER_MIN_RADIUS = 0.75


@dataclass(frozen=True)
class HankelBoundReport:
    z: complex
    abs_h0: float
    weber_rhs: float
    simple_rhs: float

    @property
    def weber_margin(self) -> float:
        return self.weber_rhs - self.abs_h0

    @property
    def simple_margin(self) -> float:
        return self.simple_rhs - self.abs_h0

    def diagnostics(self) -> list[Diagnostic]:
        out = []
        for name, margin in (("weber", self.weber_margin), ("simple", self.simple_margin)):
            if margin < 0:
                out.append(
                    Diagnostic.warning(
                        codes.NEGATIVE_MARGIN, f"{name} bound violated at z={self.z}"
                    ).note(f"margin {margin:.3e}")
                )
        return out


def _leading(order: int, r: np.ndarray, z: np.ndarray) -> np.ndarray:
    # |sqrt(2/(pi z)) exp(i(z - order pi/2 - pi/4))| = sqrt(2/(pi r)) exp(-Im z)
    return np.sqrt(2.0 / (np.pi * r)) * np.exp(-z.imag)


def weber_bound(order: int, z):
    """Weber's inequality for |H^(1)_order(z)|, order 1 or 2, as stated for 3/4 < |z|.

    |H_nu(z)| <= |sqrt(2/(pi z)) e^{i(z - nu pi/2 - pi/4)}| (1 - (nu - 1/2)/(2r))^(-nu - 1/2)
    """
    if order not in (1, 2):
        raise DomainError(f"weber bound is stated for orders 1 and 2, got {order}")
    arr, scalar = _prepare(z)
    r = np.abs(arr)
    if np.any(r <= WEBER_MIN_RADIUS):
        raise DomainError(f"weber bound needs |z| > {WEBER_MIN_RADIUS}")
    value = _leading(order, r, arr) * (1.0 - (order - 0.5) / (2.0 * r)) ** (-order - 0.5)
    return float(value[0]) if scalar else value


def _bound_arrays(arr: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    r = np.abs(arr)
    abs_h0 = np.abs(hankel1_orders(0, arr)[0])
    weber = (
        np.sqrt(2.0 / (np.pi * r))
        * np.exp(-arr.imag)
        * ((2.0 / r) * (1.0 - 1.0 / (4.0 * r)) ** -1.5 + (1.0 - 3.0 / (4.0 * r)) ** -1.25)
    )
    simple = np.exp(np.abs(arr.imag)) / np.sqrt(arr.real)
    return abs_h0, weber, simple


def certify_bounds(z: complex) -> HankelBoundReport:
    """|H_0(z)| against the Weber-type bound and e^{|Im z|}/sqrt(Re z)."""
    arr, _ = _prepare(z)
    if abs(arr[0]) <= WEBER_MIN_RADIUS:
        raise DomainError(
            f"certify_bounds needs |z| > {WEBER_MIN_RADIUS}, got |z|={abs(arr[0]):.6g}"
        )
    abs_h0, weber, simple = _bound_arrays(arr)
    return HankelBoundReport(
        z=complex(arr[0]),
        abs_h0=float(abs_h0[0]),
        weber_rhs=float(weber[0]),
        simple_rhs=float(simple[0]),
    )


def certify_many(z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized margins (weber, simple) on an array of arguments."""
    arr, _ = _prepare(z)
    if np.any(np.abs(arr) <= WEBER_MIN_RADIUS):
        raise DomainError(f"certify_many needs every |z| > {WEBER_MIN_RADIUS}")
    abs_h0, weber, simple = _bound_arrays(arr)
    return weber - abs_h0, simple - abs_h0
