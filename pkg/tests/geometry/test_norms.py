"""Sobolev norms, budgets and separation."""

import math

import numpy as np
import pytest

from helmstab.diagnostics import codes
from helmstab.errors import ConfigError, GeometryError
from helmstab.geometry import (
    BumpSum,
    InteriorGrid,
    SobolevBudget,
    SourcePair,
    make_bump,
    make_disk,
    make_polygon,
    separation,
    sobolev_norms,
)


def _exact_h1_square(amplitude, radius):
    # ||b||^2 = A^2 R^2 pi/11, ||grad b||^2 = 10 pi A^2 / 9
    return amplitude**2 * radius**2 * math.pi / 11, 10 * math.pi * amplitude**2 / 9


def test_zero_field():
    assert sobolev_norms(BumpSum(), 4) == (0.0, 0.0, 0.0, 0.0, 0.0)


def test_single_bump_exact():
    field = BumpSum.of([make_bump((0.1, 0.0), 0.3, 2.0)])
    l2, grad = _exact_h1_square(2.0, 0.3)
    norms = sobolev_norms(field, 1)
    assert norms[0] ** 2 == pytest.approx(l2, rel=1e-10)
    assert norms[1] ** 2 == pytest.approx(l2 + grad, rel=1e-10)


def test_brute_force_tensor_quadrature():
    field = BumpSum.of([make_bump((0.0, 0.0), 0.4)])
    fine = InteriorGrid.covering((-0.4, 0.4, -0.4, 0.4), 0.4 / 40, order=6)
    np.testing.assert_allclose(
        sobolev_norms(field, 2, fine), sobolev_norms(field, 2), rtol=1e-6
    )


def test_homogeneity():
    field = BumpSum.of([make_bump((0.0, 0.1), 0.25, 1.0), make_bump((0.2, 0.0), 0.2, -0.5)])
    np.testing.assert_allclose(
        sobolev_norms(2 * field, 4), 2 * np.array(sobolev_norms(field, 4)), rtol=1e-12
    )


def test_monotone_in_order():
    field = BumpSum.of([make_bump((0.0, 0.0), 0.3, 1.0), make_bump((0.1, 0.2), 0.2, 0.7)])
    norms = sobolev_norms(field, 4)
    assert all(a <= b for a, b in zip(norms, norms[1:], strict=False))


def test_covering_grid_handles_disjoint_sum():
    a, b = make_bump((-0.3, 0.0), 0.2, 1.0), make_bump((0.3, 0.0), 0.25, 2.0)
    summed = sobolev_norms(BumpSum.of([a, b]), 1)
    separate = [sobolev_norms(BumpSum.of([x]), 1) for x in (a, b)]
    for order in (0, 1):
        expected = math.sqrt(separate[0][order] ** 2 + separate[1][order] ** 2)
        assert summed[order] == pytest.approx(expected, rel=1e-6)


def test_order_above_four_unsupported():
    with pytest.raises(ConfigError):
        sobolev_norms(BumpSum(), 5)


class TestBudget:
    def test_budget_at_least_one(self):
        disk = make_disk(1.0, 64)
        tiny = SourcePair.from_bumps(disk, f1=[make_bump((0, 0), 0.3, 1e-6)])
        assert SobolevBudget.of(tiny).M == 1.0

    def test_budget_covers_norms(self):
        disk = make_disk(1.0, 64)
        pair = SourcePair.from_bumps(
            disk, f0=[make_bump((0, 0), 0.3, 1.0)], f1=[make_bump((0.2, 0), 0.3, 1.0)]
        )
        budget = SobolevBudget.of(pair)
        assert budget.smoothness_square <= budget.M**2 * (1 + 1e-12)
        assert budget.M > 1

    def test_rejects_small_m(self):
        with pytest.raises(ConfigError):
            SobolevBudget(0.5, (0.0,) * 5, (0.0,) * 4)


class TestSeparation:
    def test_centered(self):
        disk = make_disk(1.0, 128)
        pair = SourcePair(f1=BumpSum.of([make_bump((0, 0), 0.3)]))
        assert separation(disk, pair) == pytest.approx(0.7)

    def test_offset(self):
        disk = make_disk(1.0, 128)
        pair = SourcePair(f0=BumpSum.of([make_bump((0.5, 0), 0.2)]))
        assert separation(disk, pair) == pytest.approx(0.3)

    @pytest.mark.parametrize("radius", [1.0, 1.5])
    def test_touching_support(self, radius):
        disk = make_disk(1.0, 128)
        with pytest.raises(GeometryError):
            SourcePair.from_bumps(disk, f1=[make_bump((0, 0), radius)])

    def test_support_outside_domain(self):
        disk = make_disk(1.0, 128)
        with pytest.raises(GeometryError):
            SourcePair.from_bumps(disk, f1=[make_bump((3.0, 0), 0.5)])

    def test_support_between_sparse_nodes(self):
        square = make_polygon([(-1, -1), (1, -1), (1, 1), (-1, 1)], 2)
        nearest_node = np.linalg.norm(square.nodes - np.array([0.5, 0.6]), axis=1).min()
        assert nearest_node > 0.6
        with pytest.raises(GeometryError) as info:
            SourcePair.from_bumps(square, f1=[make_bump((0.5, 0.6), 0.45)])
        assert info.value.code == codes.SUPPORT_TOUCHES_BOUNDARY

    def test_polygon_distance_uses_edges(self):
        square = make_polygon([(-1, -1), (1, -1), (1, 1), (-1, 1)], 2)
        pair = SourcePair(f1=BumpSum.of([make_bump((0.5, 0.6), 0.3)]))
        assert separation(square, pair) == pytest.approx(0.1, abs=1e-12)
