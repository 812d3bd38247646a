"""Hankel bound certification."""

import math

import numpy as np
import pytest

from helmstab.errors import DomainError
from helmstab.specfun import certify_bounds, certify_many, hankel1, weber_bound
from helmstab.specfun.oracle import half_plane_sample


def test_certify_at_one():
    report = certify_bounds(1.0)
    assert report.abs_h0 == pytest.approx(0.7703, abs=1e-4)
    assert report.simple_rhs == pytest.approx(1.0)
    assert report.simple_margin == pytest.approx(0.2297, abs=1e-4)
    assert report.weber_margin > 0
    assert report.diagnostics() == []


def test_certify_at_ten():
    report = certify_bounds(10.0)
    assert report.abs_h0 == pytest.approx(0.2520, abs=1e-3)
    assert report.weber_margin > 0
    assert report.simple_margin > 0


def test_certify_complex():
    report = certify_bounds(1 + 1j)
    assert report.simple_rhs == pytest.approx(math.e)
    assert report.simple_rhs >= report.abs_h0


def test_margins_nonnegative_on_sample():
    z = half_plane_sample(10_000, 0.75, 100.0, seed=11)
    weber, simple = certify_many(z)
    assert weber.min() >= 0
    assert simple.min() >= 0


def test_certify_rejects_small_radius():
    with pytest.raises(DomainError):
        certify_bounds(0.5)


def test_weber_bound_orders():
    with pytest.raises(DomainError):
        weber_bound(3, 2.0)
    with pytest.raises(DomainError):
        weber_bound(1, 0.7)
    value = weber_bound(1, 4.0)
    leading = math.sqrt(2 / (math.pi * 4.0)) * (1 - 0.5 / 8.0) ** -1.5
    assert value == pytest.approx(leading)


def test_weber_bound_order_one_dominates_large_argument():
    x = np.linspace(5.0, 80.0, 50)
    assert np.all(weber_bound(1, x) >= np.abs(hankel1(1, x)))
