"""Power series for J0, J1, Y0, Y1 and Miller recurrence for J2, J3.

All routines are vectorized over complex numpy arrays and assume the caller
has already validated Re z > 0 and |z| below the series threshold.
"""

from __future__ import annotations

import numpy as np

EULER_GAMMA = 0.57721566490153286061

# Terms needed for (|z|/2)^(2m)/(m!)^2 to fall below 1e-17 of the peak at |z| < 14.
_SERIES_TERMS = 64

# Extra orders above max(order, 2|z|) where the Miller recurrence starts.
_MILLER_PADDING = 24
_RESCALE_AT = 1e150


def j0_j1(z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """J0 and J1 from their power series."""
    half = 0.5 * z
    q = -(half * half)
    term0 = np.ones_like(z)
    term1 = half.copy()
    j0 = term0.copy()
    j1 = term1.copy()
    for m in range(1, _SERIES_TERMS):
        term0 = term0 * q / (m * m)
        term1 = term1 * q / (m * (m + 1))
        j0 = j0 + term0
        j1 = j1 + term1
    return j0, j1


def y0_y1(z: np.ndarray, j0: np.ndarray, j1: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Y0 and Y1 from their logarithmic series, given J0 and J1 at the same points."""
    half = 0.5 * z
    q = -(half * half)
    log_term = np.log(half) + EULER_GAMMA

    # Y0 = (2/pi) [ (log(z/2) + gamma) J0 - sum_{m>=1} (-1)^m H_m (z/2)^(2m) / (m!)^2 ]
    term0 = np.ones_like(z)
    sum0 = np.zeros_like(z)
    # Y1 tail: sum_{k>=0} (-1)^k (H_k + H_{k+1}) (z/2)^(2k+1) / (k! (k+1)!)
    term1 = half.copy()
    sum1 = term1 * 1.0  # H_0 + H_1 = 1
    harmonic = 0.0
    for m in range(1, _SERIES_TERMS):
        harmonic += 1.0 / m
        term0 = term0 * q / (m * m)
        sum0 = sum0 + harmonic * term0
        term1 = term1 * q / (m * (m + 1))
        # H_m + H_{m+1}
        sum1 = sum1 + (2.0 * harmonic + 1.0 / (m + 1)) * term1

    y0 = (2.0 / np.pi) * (log_term * j0 - sum0)
    y1 = (2.0 / np.pi) * log_term * j1 - 2.0 / (np.pi * z) - sum1 / np.pi
    return y0, y1


def miller_j(max_order: int, z: np.ndarray, j0: np.ndarray, j1: np.ndarray) -> list[np.ndarray]:
    """J_0 .. J_max_order by downward recurrence, normalized against the series J0/J1.

    The unnormalized sequence f_n is proportional to J_n. The scale is fixed
    against whichever of J0, J1 has the larger magnitude so that a zero of
    J0 does not spoil the normalization.
    """
    if max_order <= 1:
        return [j0, j1][: max_order + 1]

    start = int(max_order + 2 * np.ceil(np.max(np.abs(z), initial=0.0)) + _MILLER_PADDING)
    f_next = np.zeros_like(z)
    f_curr = np.full_like(z, 1e-30)
    kept: dict[int, np.ndarray] = {}
    for n in range(start, 0, -1):
        f_prev = (2.0 * n / z) * f_curr - f_next
        f_next, f_curr = f_curr, f_prev
        if n - 1 <= max_order:
            kept[n - 1] = f_curr
        # Keep the recurrence inside double range for tiny |z|.
        big = np.abs(f_curr) > _RESCALE_AT
        if np.any(big):
            scale = np.where(big, 1.0 / _RESCALE_AT, 1.0)
            f_curr = f_curr * scale
            f_next = f_next * scale
            kept = {k: v * scale for k, v in kept.items()}

    f0, f1 = kept[0], kept[1]
    use_j0 = np.abs(f0) >= np.abs(f1)
    norm = np.where(use_j0, j0 / np.where(use_j0, f0, 1.0), j1 / np.where(use_j0, 1.0, f1))
    out = [j0, j1]
    for n in range(2, max_order + 1):
        out.append(kept[n] * norm)
    return out


def forward_y(max_order: int, z: np.ndarray, y0: np.ndarray, y1: np.ndarray) -> list[np.ndarray]:
    """Y_0 .. Y_max_order by forward recurrence (stable for Y)."""
    out = [y0, y1]
    for n in range(1, max_order):
        out.append((2.0 * n / z) * out[n] - out[n - 1])
    return out[: max_order + 1]
