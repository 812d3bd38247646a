"""Bump bases: layout, boundary checks, conditioning and snapping."""

import numpy as np
import pytest

from helmstab.diagnostics import codes
from helmstab.errors import ConditioningError, ConfigError, GeometryError
from helmstab.geometry import SourcePair, make_bump
from helmstab.inverse import BasisSpec, make_basis


class TestBasisSpec:
    def test_reference_layout(self):
        spec = BasisSpec()
        centers = spec.centers()
        assert centers.shape == (25, 2)
        assert spec.step == pytest.approx(0.25)
        assert centers.min() == pytest.approx(-0.5)
        assert centers.max() == pytest.approx(0.5)

    def test_single_center(self):
        spec = BasisSpec(count=1, extent=0.0)
        assert spec.step == 0.0
        np.testing.assert_array_equal(spec.centers(), [[0.0, 0.0]])

    @pytest.mark.parametrize("kwargs", [{"count": 0}, {"radius": 0.0}, {"extent": -1.0}])
    def test_rejects_bad_values(self, kwargs):
        with pytest.raises(ConfigError):
            BasisSpec(**kwargs)


class TestMakeBasis:
    def test_channels(self, small_basis):
        assert small_basis.n0 == small_basis.n1 == 9
        assert small_basis.size == 18
        first = small_basis.element_source(0)
        last = small_basis.element_source(17)
        assert len(first.f0.terms) == 1 and not first.f1.terms
        assert len(last.f1.terms) == 1 and not last.f0.terms

    def test_reference_basis_fits_unit_disk(self, disk):
        basis = make_basis(disk, BasisSpec())
        assert basis.size == 50
        assert basis.gram_floor() > 1e-10

    def test_rejects_basis_crossing_boundary(self, disk):
        with pytest.raises(GeometryError) as exc:
            make_basis(disk, BasisSpec(count=3, radius=0.3, extent=0.8))
        assert exc.value.code == codes.SUPPORT_TOUCHES_BOUNDARY
        assert exc.value.notes

    def test_rejects_nearly_dependent_elements(self, disk):
        with pytest.raises(ConditioningError) as exc:
            make_basis(disk, BasisSpec(count=2, radius=0.2, extent=1e-7))
        assert exc.value.code == codes.ILL_CONDITIONED_BASIS


class TestFields:
    def test_coefficients_map_to_channels(self, small_basis):
        c = np.zeros(small_basis.size)
        c[2], c[9 + 4] = 3.0, -1.5
        pair = small_basis.fields(c)
        assert pair.f0.evaluate(*small_basis.f0_elements[2].center) == pytest.approx(3.0)
        assert pair.f1.evaluate(0.0, 0.0) == pytest.approx(-1.5)

    def test_rejects_wrong_length(self, small_basis):
        with pytest.raises(ConfigError):
            small_basis.fields(np.zeros(5))

    def test_snap_to_nearest_element(self, disk, small_basis):
        truth = SourcePair.from_bumps(
            disk,
            f0=[make_bump((-0.35, 0.42), 0.25, 0.5)],
            f1=[make_bump((0.03, -0.02), 0.3, 2.0)],
        )
        snapped, coeffs = small_basis.snap(truth)
        assert np.count_nonzero(coeffs) == 2
        (b0,) = snapped.f0.terms
        (b1,) = snapped.f1.terms
        assert b0.center == pytest.approx((-0.4, 0.4))
        assert b0.amplitude == 0.5
        assert b1.center == pytest.approx((0.0, 0.0))
        assert b1.amplitude == 2.0
        assert b1.radius == small_basis.f1_elements[0].radius

    def test_snap_field_matches_coefficients(self, disk, small_basis):
        truth = SourcePair.from_bumps(
            disk,
            f0=[make_bump((0.38, 0.0), 0.2, 1.0), make_bump((0.42, 0.03), 0.2, -1.0)],
            f1=[make_bump((-0.1, 0.35), 0.2, 1.5)],
        )
        snapped, coeffs = small_basis.snap(truth)
        assert snapped.f0.terms == ()
        assert len(snapped.f1.terms) == 1
        full = small_basis.fields(coeffs)
        xs, ys = np.meshgrid(np.linspace(-0.6, 0.6, 9), np.linspace(-0.6, 0.6, 9))
        np.testing.assert_allclose(snapped.f1(xs, ys), full.f1(xs, ys), atol=1e-15)
        np.testing.assert_allclose(snapped.f0(xs, ys), 0.0)
