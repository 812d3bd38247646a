"""Tests for the time-domain wave solution and its Fourier link."""

from __future__ import annotations

import csv

import numpy as np
import pytest

from helmstab.errors import ConfigError
from helmstab.forward import FrequencyGrid, field
from helmstab.geometry import BumpSum, PolarDensity, SourcePair, make_bump, make_disk
from helmstab.wavedom import (
    DEFAULT_OMEGA_MAX,
    WaveEvalConfig,
    cone_integral,
    energy_growth,
    fourier_link,
    parseval_band,
    parseval_check,
    parseval_report,
    temporal_fourier,
    wave_solution,
    wave_trace,
    write_traces,
)

OFFSET = BumpSum.of([make_bump((0.2, 0.1), 0.35, 1.0)])


@pytest.fixture(scope="module")
def coarse_disk():
    return make_disk(1.0, 32)


@pytest.fixture(scope="module")
def coarse_reference(coarse_disk):
    return SourcePair.from_bumps(
        coarse_disk,
        f0=[make_bump((0.15, -0.1), 0.3, 1.0)],
        f1=[make_bump((-0.2, 0.2), 0.35, 1.0), make_bump((0.25, 0.3), 0.2, -0.5)],
        density=PolarDensity(32, 48),
    )


class TestConeIntegral:
    def test_brute_force_oracle_at_center(self, centered_source):
        t, radius = 0.1, 0.4
        # W = int_0^t b(sqrt(t^2 - v^2)) dv for a radial bump seen from its center
        n = 1_000_000
        v = (np.arange(n) + 0.5) * t / n
        expected = np.sum((1.0 - (t * t - v * v) / radius**2) ** 5) * t / n
        got = wave_solution(np.zeros(2), t, centered_source)
        assert got == pytest.approx(expected, rel=1e-6)

    def test_finite_propagation_speed(self, disk, centered_source):
        x = disk.nodes[0]
        dist = np.linalg.norm(x) - 0.4
        times = np.linspace(0.0, dist - 1e-9, 50)
        assert np.all(wave_solution(x, times, centered_source) == 0.0)
        assert wave_solution(x, dist + 0.05, centered_source) != 0.0

    def test_negative_time_is_zero(self, centered_source):
        assert wave_solution(np.zeros(2), -0.3, centered_source) == 0.0

    def test_initial_value_is_minus_f0(self, disk):
        f0 = make_bump((0.0, 0.0), 0.4, 1.0)
        source = SourcePair.from_bumps(disk, f0=[f0])
        for x in (np.array([0.1, 0.05]), np.array([-0.2, 0.15])):
            got = wave_solution(x, 1e-3, source)
            assert got == pytest.approx(-float(f0.evaluate(x[0], x[1])), rel=1e-3)

    def test_even_in_time(self):
        x = np.array([1.0, 0.0])
        for t in (0.5, 0.9, 1.4):
            fwd = cone_integral(x, t, OFFSET)
            back = cone_integral(x, -t, OFFSET)
            assert back.value[0] == fwd.value[0]
            assert back.dt[0] == -fwd.dt[0]

    def test_time_derivatives_match_differences(self):
        x = np.array([1.0, 0.0])
        t, h = 0.9, 1e-5
        mid = cone_integral(x, t, OFFSET)
        near = cone_integral(x, [t - h, t + h], OFFSET)
        fd_dt = (near.value[1] - near.value[0]) / (2 * h)
        fd_dtt = (near.dt[1] - near.dt[0]) / (2 * h)
        assert mid.dt[0] == pytest.approx(fd_dt, rel=1e-5, abs=1e-9)
        assert mid.dtt[0] == pytest.approx(fd_dtt, rel=1e-5, abs=1e-8)

    def test_space_derivatives_match_differences(self):
        x = np.array([0.9, -0.2])
        t, h = 1.0, 1e-5
        mid = cone_integral(x, t, OFFSET)
        for axis in range(2):
            step = np.zeros(2)
            step[axis] = h
            plus = cone_integral(x + step, t, OFFSET)
            minus = cone_integral(x - step, t, OFFSET)
            fd = (plus.value[0] - minus.value[0]) / (2 * h)
            fd_t = (plus.dt[0] - minus.dt[0]) / (2 * h)
            assert mid.grad[0, axis] == pytest.approx(fd, rel=1e-5, abs=1e-9)
            assert mid.grad_dt[0, axis] == pytest.approx(fd_t, rel=1e-5, abs=1e-8)

    def test_zero_field(self):
        res = cone_integral(np.zeros(2), [0.0, 0.5], BumpSum())
        assert np.all(res.value == 0.0)
        assert np.all(res.dt == 0.0)


class TestTrace:
    def test_trace_matches_solution(self, disk, reference_source):
        x = disk.nodes[5]
        times = np.linspace(0.0, 2.0, 21)
        tr = wave_trace(x, times, reference_source)
        np.testing.assert_array_equal(tr.U, wave_solution(x, times, reference_source))

    def test_negative_times_rejected(self, disk, reference_source):
        with pytest.raises(ConfigError):
            wave_trace(disk.nodes[0], [-0.1, 0.0], reference_source)

    def test_csv_export(self, tmp_path, disk, centered_source):
        times = np.linspace(0.0, 1.0, 5)
        tr = wave_trace(disk.nodes[0], times, centered_source)
        path = write_traces(tmp_path / "traces.csv", [(0, tr), (3, tr)])
        with path.open() as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == ["t", "node_index", "U", "dU_dt"]
        assert len(rows) == 1 + 2 * len(times)
        assert rows[6][1] == "3"


class TestFourierLink:
    def test_zero_source(self, disk):
        res = temporal_fourier(disk.nodes[0], 3.0, SourcePair())
        assert res.value == 0
        assert res.tail_bound == 0.0

    def test_matches_helmholtz_field(self, disk, reference_source):
        x = disk.nodes[7]
        res = temporal_fourier(x, 5.0, reference_source)
        expected = field(x, 5.0, reference_source)
        assert abs(res.value - expected) <= 1e-3 * abs(expected)

    def test_longer_horizon_within_tail_bound(self, disk, reference_source):
        x = disk.nodes[20]
        short = temporal_fourier(x, 5.0, reference_source)
        long = temporal_fourier(
            x, 5.0, reference_source, WaveEvalConfig(t_max=2.0 * short.t_max)
        )
        assert abs(long.value - short.value) <= 5 * (short.tail_bound + long.tail_bound) + 1e-12

    def test_step_resolves_wave_number(self, disk, centered_source):
        res = temporal_fourier(disk.nodes[0], 10.0, centered_source)
        assert res.dt * 10.0 <= 0.1 + 1e-12

    def test_rejects_nonpositive_k(self, disk, centered_source):
        with pytest.raises(ConfigError):
            temporal_fourier(disk.nodes[0], 0.0, centered_source)

    def test_horizon_must_clear_sources(self, disk, centered_source):
        with pytest.raises(ConfigError, match="does not clear"):
            temporal_fourier(disk.nodes[0], 2.0, centered_source, WaveEvalConfig(t_max=1.0))

    @pytest.mark.slow
    def test_fourier_link_grid(self, disk, reference_source):
        nodes = range(0, disk.node_count, disk.node_count // 8)
        rows = fourier_link(disk, reference_source, nodes, [1.0, 2.0, 5.0, 8.0])
        assert len(rows) == 32
        assert max(r.relative_error for r in rows) <= 1e-3


class TestParseval:
    def test_zero_source(self, coarse_disk):
        assert parseval_check(coarse_disk, SourcePair()) == 0.0

    def test_reference_scene(self, coarse_disk, coarse_reference):
        report = parseval_report(coarse_disk, coarse_reference)
        assert report.time_side > 0
        assert report.discrepancy <= 5e-2

    def test_refinement_shrinks_discrepancy(self, coarse_disk, coarse_reference):
        coarse = parseval_report(
            coarse_disk, coarse_reference, cfg=WaveEvalConfig(t_max=3.0, dt=0.05)
        )
        fine = parseval_report(
            coarse_disk, coarse_reference, cfg=WaveEvalConfig(t_max=4.0, dt=0.025)
        )
        assert fine.omega_max > coarse.omega_max
        assert fine.discrepancy < coarse.discrepancy

    def test_band_follows_time_step(self):
        assert parseval_band(WaveEvalConfig(dt=0.025)) == pytest.approx(np.pi / 0.025)
        assert parseval_band(WaveEvalConfig(dt=0.5)) == DEFAULT_OMEGA_MAX

    def test_fixed_band_leaves_cutoff_error(self, coarse_disk, coarse_reference):
        cfg = WaveEvalConfig(t_max=4.0, dt=0.025)
        narrow = parseval_report(coarse_disk, coarse_reference, FrequencyGrid(20.0), cfg)
        wide = parseval_report(coarse_disk, coarse_reference, cfg=cfg)
        assert narrow.frequency_side < wide.frequency_side
        assert wide.discrepancy < narrow.discrepancy


class TestEnergy:
    def test_zero_source(self):
        report = energy_growth(SourcePair(), [0.5, 1.0])
        assert np.all(report.energy == 0.0)

    def test_growth_constant_stable_under_refinement(self, centered_source):
        times = [0.25, 0.5, 1.0]
        coarse = energy_growth(centered_source, times, points_per_axis=24)
        fine = energy_growth(centered_source, times, points_per_axis=32)
        # energy conservation caps the ratio at (2 + t) / (1 + t)
        assert fine.fitted_constant <= 2.0
        assert fine.fitted_constant == pytest.approx(coarse.fitted_constant, rel=0.1)


def test_config_validation():
    with pytest.raises(ConfigError):
        WaveEvalConfig(dt=0.0)
    with pytest.raises(ConfigError):
        WaveEvalConfig(n_phi=2)
