"""High-precision reference values and golden fixture tables."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import mpmath
import numpy as np
from scipy.stats import qmc

ORACLE_DIGITS = 30
GOLDEN_HEADER = ("z_re", "z_im", "order", "h_re", "h_im")


def _call(fn, order: int, z: complex) -> complex:
    with mpmath.workdps(ORACLE_DIGITS):
        return complex(fn(order, mpmath.mpc(z.real, z.imag)))


def oracle_hankel1(order: int, z: complex) -> complex:
    """H^(1)_order(z) = 2 / (pi i^(order+1)) K_order(-i z), for -pi/2 < arg z <= pi.

    J + iY cancels to zero in working precision once Im z is large; K does not.
    """
    with mpmath.workdps(ORACLE_DIGITS):
        w = mpmath.mpc(z.real, z.imag)
        scale = 2 / (mpmath.pi * mpmath.mpc(0, 1) ** (order + 1))
        return complex(scale * mpmath.besselk(order, mpmath.mpc(0, -1) * w))


def oracle_bessel_j(order: int, z: complex) -> complex:
    return _call(mpmath.besselj, order, z)


def oracle_bessel_y(order: int, z: complex) -> complex:
    return _call(mpmath.bessely, order, z)


def half_plane_sample(n: int, r_min: float, r_max: float, seed: int = 0) -> np.ndarray:
    """Quasi-random points with Re z > 0 and r_min < |z| < r_max (Halton in (r, arg))."""
    unit = qmc.Halton(d=2, scramble=True, seed=seed).random(n)
    # keep strictly inside the open sector and annulus
    unit = np.clip(unit, 1e-9, 1.0 - 1e-9)
    r = r_min + (r_max - r_min) * unit[:, 0]
    arg = (unit[:, 1] - 0.5) * np.pi
    return r * np.exp(1j * arg)


@dataclass(frozen=True)
class GoldenRow:
    z: complex
    order: int
    value: complex


def build_golden(n: int, r_max: float = 100.0, seed: int = 0) -> list[GoldenRow]:
    """Reference H^(1) values cycling orders 0-3 over a half-plane sample."""
    points = half_plane_sample(n, 1e-3, r_max, seed=seed)
    return [
        GoldenRow(complex(z), i % 4, oracle_hankel1(i % 4, complex(z)))
        for i, z in enumerate(points)
    ]


def write_golden(rows: list[GoldenRow], path: Path) -> None:
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(GOLDEN_HEADER)
        for row in rows:
            writer.writerow(
                [
                    format(row.z.real, ".17g"),
                    format(row.z.imag, ".17g"),
                    row.order,
                    format(row.value.real, ".17g"),
                    format(row.value.imag, ".17g"),
                ]
            )


def read_golden(path: Path) -> list[GoldenRow]:
    with path.open(newline="") as fh:
        reader = csv.DictReader(fh)
        return [
            GoldenRow(
                complex(float(rec["z_re"]), float(rec["z_im"])),
                int(rec["order"]),
                complex(float(rec["h_re"]), float(rec["h_im"])),
            )
            for rec in reader
        ]
