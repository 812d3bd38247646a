"""Measurement noise on boundary traces."""

from __future__ import annotations

import numpy as np

from helmstab.errors import ConfigError
from helmstab.forward import CauchyDataSet, NoiseInfo


def _rms(values: np.ndarray) -> float:
    return float(np.sqrt(np.mean(np.abs(values) ** 2))) if values.size else 0.0


def add_noise(data: CauchyDataSet, level: float, seed: int) -> CauchyDataSet:
    """Complex Gaussian perturbations of u, ux and uy.

    Each array gets standard deviation level * RMS(array); real and imaginary
    parts are independent with level * RMS / sqrt(2) each.
    """
    if level < 0:
        raise ConfigError(f"noise level must be nonnegative, got {level}")
    if level == 0:
        return data.replace(noise=NoiseInfo(0.0, seed))
    rng = np.random.default_rng(seed)
    arrays = [data.u, data.grad[..., 0], data.grad[..., 1]]
    sigmas = tuple(level * _rms(a) for a in arrays)
    noisy = []
    for a, sigma in zip(arrays, sigmas, strict=True):
        scale = sigma / np.sqrt(2.0)
        noisy.append(a + scale * (rng.standard_normal(a.shape) + 1j * rng.standard_normal(a.shape)))
    return data.replace(
        u=noisy[0],
        grad=np.stack(noisy[1:], axis=2),
        noise=NoiseInfo(float(level), int(seed), sigmas),
    )


def noise_norm(data: CauchyDataSet) -> float:
    """Expected norm of the perturbation in the weighted data metric."""
    if data.noise is None:
        raise ConfigError("dataset carries no noise description")
    s_u, s_x, s_y = data.noise.sigmas
    per_freq = data.grid.samples**2 * s_u**2 + s_x**2 + s_y**2
    return float(np.sqrt(data.grid.weights @ per_freq * data.domain.weights.sum()))
