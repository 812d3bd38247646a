"""Large-argument Hankel expansion with optimal truncation."""

from __future__ import annotations

import numpy as np

MIN_TERMS = 8
MAX_TERMS = 40


def _phase_factor(order: int, z: np.ndarray) -> np.ndarray:
    return np.sqrt(2.0 / (np.pi * z)) * np.exp(1j * (z - 0.5 * order * np.pi - 0.25 * np.pi))


def hankel1_asymptotic(order: int, z: np.ndarray) -> np.ndarray:
    """H^(1)_order(z) for order 0 or 1 from the Hankel expansion.

    Terms i^k a_k(order) / z^k with a_k = a_{k-1} (4 nu^2 - (2k-1)^2) / (8k).
    At least MIN_TERMS are summed, then summation continues while the terms
    keep shrinking, up to MAX_TERMS.
    """
    mu = 4.0 * order * order
    terms = np.empty((MAX_TERMS,) + z.shape, dtype=complex)
    terms[0] = 1.0
    for k in range(1, MAX_TERMS):
        coeff = (mu - (2 * k - 1) ** 2) / (8.0 * k)
        terms[k] = terms[k - 1] * (1j * coeff / z)

    mags = np.abs(terms)
    growing = np.zeros(terms.shape, dtype=bool)
    growing[MIN_TERMS:] = mags[MIN_TERMS:] > mags[MIN_TERMS - 1 : -1]
    # First growing term (or zero term) ends the sum.
    stopped = np.cumsum(growing | (mags == 0.0), axis=0) > 0
    series = np.where(stopped, 0.0, terms).sum(axis=0)
    return _phase_factor(order, z) * series
