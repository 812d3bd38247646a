"""Field and gradient evaluation."""

import numpy as np
import pytest

from helmstab.diagnostics import codes
from helmstab.errors import ConfigError, DomainError
from helmstab.forward import (
    KernelMethod,
    SectorPoint,
    field,
    field_growth_bound,
    field_pair,
    grad_field,
    traces,
)
from helmstab.geometry import SourcePair, separation


def test_zero_source(disk):
    zero = SourcePair()
    assert field(disk.nodes[0], 3.0, zero) == 0
    assert np.all(grad_field(disk.nodes[0], 3.0, zero) == 0)


def test_rotational_symmetry(disk, centered_source):
    u, _ = traces(disk.nodes, np.array([5.0]), centered_source)
    mags = np.abs(u[0])
    np.testing.assert_allclose(mags, mags[0], rtol=1e-8)


def test_methods_agree(disk, reference_source):
    ks = np.array([0.5, 2.0, 5.0, 3.0 + 1.0j])
    ua, ga = traces(disk.nodes[::8], ks, reference_source, method="addition")
    uq, gq = traces(disk.nodes[::8], ks, reference_source, method=KernelMethod.QUADRATURE)
    np.testing.assert_allclose(uq, ua, rtol=1e-8, atol=1e-8 * np.abs(ua).max())
    np.testing.assert_allclose(gq, ga, rtol=1e-8, atol=1e-8 * np.abs(ga).max())


def test_quadrature_self_convergence(disk, centered_source):
    x = disk.nodes[5]
    coarse = field(x, 5.0, centered_source, method="quadrature")
    fine_source = centered_source.with_density(centered_source.density.refined(4))
    fine = field(x, 5.0, fine_source, method="quadrature")
    assert abs(coarse - fine) <= 1e-6 * abs(fine)


def test_gradient_matches_finite_differences(disk, reference_source):
    x = disk.nodes[3]
    k = 4.0
    h = 1e-5 * disk.diameter
    fd = np.array(
        [
            (field(x + [h, 0], k, reference_source) - field(x - [h, 0], k, reference_source))
            / (2 * h),
            (field(x + [0, h], k, reference_source) - field(x - [0, h], k, reference_source))
            / (2 * h),
        ]
    )
    g = grad_field(x, k, reference_source)
    assert np.linalg.norm(g - fd) <= 1e-4 * np.linalg.norm(g)


def test_gradient_normal_for_centered_bump(disk, centered_source):
    _, grad = traces(disk.nodes, np.array([5.0]), centered_source)
    tangents = np.column_stack([-disk.normals[:, 1], disk.normals[:, 0]])
    tangential = np.abs(np.sum(grad[0] * tangents, axis=1))
    assert tangential.max() < 1e-8 * np.abs(grad[0]).max()


def test_linearity(disk, reference_source):
    x = disk.nodes[10]
    assert field(x, 2.5, reference_source.scaled(-3.0)) == pytest.approx(
        -3.0 * field(x, 2.5, reference_source), rel=1e-13
    )


def test_analytic_in_k(disk, reference_source):
    # contour integral over a small circle in the sector vanishes
    x = disk.nodes[7]
    n = 64
    theta = 2 * np.pi * np.arange(n) / n
    ks = 5.0 + 0.5 * np.exp(1j * theta)
    u, _ = traces(x, ks, reference_source)
    dk = 0.5j * np.exp(1j * theta) * (2 * np.pi / n)
    assert abs(np.sum(u[:, 0] * dk)) < 1e-6 * np.abs(u).max()


def test_sector_growth_bound(disk, reference_source):
    delta = separation(disk, reference_source)
    for k in [1.0, 3.0 + 1.0j, 6.0 - 2.0j, 8.0 + 5.0j]:
        u, _ = traces(disk.nodes, np.array([k]), reference_source)
        assert np.abs(u).max() <= field_growth_bound(k, reference_source, disk, delta)


def test_pair_conjugate_on_real_axis(disk, reference_source):
    ks = np.array([0.7, 3.0, 6.0])
    up, um, gp, gm = field_pair(disk.nodes, ks, reference_source)
    np.testing.assert_allclose(um, np.conj(up), rtol=1e-12, atol=1e-15)
    np.testing.assert_allclose(gm, np.conj(gp), rtol=1e-12, atol=1e-15)


def test_sector_point():
    p = SectorPoint(2 + 1j)
    assert (p.k1, p.k2) == (2.0, 1.0)
    assert abs(p.k) <= np.sqrt(2) * p.k1
    with pytest.raises(DomainError):
        SectorPoint(1 + 2j)


@pytest.mark.parametrize("k", [0.0, -1.0, 1 + 1.5j])
def test_rejects_k_outside_sector(disk, reference_source, k):
    with pytest.raises(DomainError):
        field(disk.nodes[0], k, reference_source)


def test_rejects_point_inside_support(reference_source):
    with pytest.raises(DomainError) as exc:
        field(np.array([0.15, -0.1]), 2.0, reference_source)
    assert exc.value.code == codes.SINGULAR_KERNEL


def test_unknown_method(disk, reference_source):
    with pytest.raises(ConfigError):
        field(disk.nodes[0], 1.0, reference_source, method="multipole")
