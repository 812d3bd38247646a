"""Weighted real forward matrix of a source basis."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from helmstab.diagnostics import codes
from helmstab.errors import ConditioningError, ConfigError
from helmstab.forward import CauchyDataSet, FrequencyGrid, KernelMethod, sweep
from helmstab.geometry import Domain
from helmstab.inverse.basis import SourceBasis

logger = logging.getLogger(__name__)


def data_vector(data: CauchyDataSet) -> np.ndarray:
    """Stack (w u, ux, uy) scaled by sqrt(w_omega w_x) as [real parts, imag parts].

    The squared Euclidean norm of the result is eps^2 of the dataset.
    """
    weights = np.sqrt(np.outer(data.grid.weights, data.domain.weights))
    z = np.concatenate(
        [(data.grid.samples[:, None] * data.u)[..., None], data.grad], axis=2
    ) * weights[..., None]
    flat = z.ravel()
    return np.concatenate([flat.real, flat.imag])


@dataclass(frozen=True, eq=False)
class ForwardMatrix:
    A: np.ndarray
    grid: FrequencyGrid
    domain: Domain
    basis: SourceBasis

    def __post_init__(self) -> None:
        rows = 2 * 3 * self.domain.node_count * len(self.grid)
        if self.A.shape != (rows, self.basis.size):
            raise ConfigError(
                f"forward matrix shape {self.A.shape} != ({rows}, {self.basis.size})",
                code=codes.GRID_MISMATCH,
            )

    def check_data(self, data: CauchyDataSet) -> np.ndarray:
        if data.grid != self.grid or data.domain.node_count != self.domain.node_count:
            raise ConfigError(
                "dataset grid or boundary nodes differ from the forward matrix",
                code=codes.GRID_MISMATCH,
                notes=[f"matrix grid {self.grid.describe()}, data grid {data.grid.describe()}"],
            )
        return data_vector(data)


def assemble(
    domain: Domain,
    basis: SourceBasis,
    grid: FrequencyGrid,
    *,
    method: KernelMethod | str = KernelMethod.ADDITION,
    threads: int | None = None,
) -> ForwardMatrix:
    """Column j is the weighted data of basis element j alone."""
    if basis.size == 0:
        raise ConditioningError("cannot assemble a forward matrix for an empty basis")

    def column(j: int) -> np.ndarray:
        data = sweep(domain, basis.element_source(j), grid, method=method, threads=1)
        return data_vector(data)

    with ThreadPoolExecutor(max_workers=threads) as pool:
        columns = list(pool.map(column, range(basis.size)))
    A = np.stack(columns, axis=1)
    if not np.all(np.isfinite(A)):
        raise ConditioningError("forward matrix has non-finite entries")
    logger.info("assembled %d x %d forward matrix (K=%g)", A.shape[0], A.shape[1], grid.K)
    return ForwardMatrix(A, grid, domain, basis)
