"""Small bases and grids so inverse tests stay fast."""

from __future__ import annotations

import pytest

from helmstab.forward import FrequencyGrid
from helmstab.inverse import BasisSpec, assemble, make_basis

SMALL_SPEC = BasisSpec(count=3, radius=0.2, extent=0.4)


@pytest.fixture(scope="session")
def small_basis(disk):
    return make_basis(disk, SMALL_SPEC)


@pytest.fixture(scope="session")
def small_grid():
    return FrequencyGrid(4.0, points_per_unit=4, panel_order=4)


@pytest.fixture(scope="session")
def small_matrix(disk, small_basis, small_grid):
    return assemble(disk, small_basis, small_grid, threads=4)
