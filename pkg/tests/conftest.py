"""Root conftest: shared scenes and markers."""

from __future__ import annotations

import os

import pytest

from helmstab.geometry import PolarDensity, SourcePair, make_bump, make_disk


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-resolution acceptance run")


def pytest_collection_modifyitems(config, items):
    if not os.environ.get("HELMSTAB_TEST_SLOW"):
        skip_slow = pytest.mark.skip(reason="slow acceptance run (set HELMSTAB_TEST_SLOW=1)")
        for item in items:
            if "slow" in item.keywords:
                item.add_marker(skip_slow)


@pytest.fixture(scope="session")
def disk():
    """Unit disk with a reduced node count."""
    return make_disk(1.0, 64)


@pytest.fixture(scope="session")
def centered_source(disk):
    return SourcePair.from_bumps(disk, f1=[make_bump((0.0, 0.0), 0.4, 1.0)])


@pytest.fixture(scope="session")
def reference_source(disk):
    """Two-channel scene used across modules."""
    return SourcePair.from_bumps(
        disk,
        f0=[make_bump((0.15, -0.1), 0.3, 1.0)],
        f1=[make_bump((-0.2, 0.2), 0.35, 1.0), make_bump((0.25, 0.3), 0.2, -0.5)],
        density=PolarDensity(32, 48),
    )
