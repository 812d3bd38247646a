"""Frequency sweeps producing Cauchy data on the boundary."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from helmstab.forward.data import CauchyDataSet
from helmstab.forward.grid import FrequencyGrid
from helmstab.forward.kernel import KernelMethod, traces
from helmstab.geometry import Domain, SourcePair, separation

logger = logging.getLogger(__name__)

# Frequencies per task. Fixed, so results never depend on the thread count.
CHUNK = 16


def sweep(
    domain: Domain,
    source: SourcePair,
    grid: FrequencyGrid,
    *,
    method: KernelMethod | str = KernelMethod.ADDITION,
    threads: int | None = None,
    scene_hash: str = "",
) -> CauchyDataSet:
    """u and grad u at every (omega, node). Chunks write disjoint slices of one array."""
    separation(domain, source)
    n_freq, n_nodes = len(grid), domain.node_count
    u = np.zeros((n_freq, n_nodes), dtype=complex)
    grad = np.zeros((n_freq, n_nodes, 2), dtype=complex)

    def work(sl: slice) -> None:
        u[sl], grad[sl] = traces(domain.nodes, grid.samples[sl], source, method=method)

    chunks = [slice(i, min(i + CHUNK, n_freq)) for i in range(0, n_freq, CHUNK)]
    if source.is_zero:
        chunks = []
    with ThreadPoolExecutor(max_workers=threads) as pool:
        list(pool.map(work, chunks))
    logger.info("swept %d frequencies x %d nodes (K=%g)", n_freq, n_nodes, grid.K)
    return CauchyDataSet(grid, domain, u, grad, scene_hash=scene_hash)
