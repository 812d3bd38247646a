"""Time-domain wave solution from the 2D Poisson formula.

The source pair launches

    U(x, t) = W[f1](x, t) - d/dt W[f0](x, t),
    W[f](x, t) = (1/2pi) int_{|x-y|<t} f(y) / sqrt(t^2 - |x-y|^2) dy,

whose temporal Fourier transform on t > 0 is the Helmholtz field u(x, k).

Cone integrals use polar coordinates around x with r = t sin(phi), which
turns the inverse square root into the smooth density t sin(phi). Every
t- and x-derivative is taken under the integral sign through the bumps'
exact derivatives, so no finite differences are involved.
"""

from __future__ import annotations

import csv
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy import integrate

from helmstab.diagnostics import codes
from helmstab.errors import AccuracyError, ConfigError
from helmstab.forward import FrequencyGrid, sweep, traces
from helmstab.geometry import Bump, BumpSum, Domain, InteriorGrid, SourcePair, gauss_legendre

logger = logging.getLogger(__name__)

TAIL_TOLERANCE = 1e-3
DEFAULT_OMEGA_MAX = 40.0
_TIME_CHUNK = 256
_ALL = frozenset({"value", "dt", "dtt", "grad", "grad_dt"})


@dataclass(frozen=True)
class WaveEvalConfig:
    """Resolution of time-domain evaluations.

    t_max of None picks |x| + d1 + 1 per evaluation point, the smallest
    horizon past which the explicit far-field form holds.
    """

    t_max: float | None = None
    dt: float = 0.02
    n_phi: int = 24
    n_theta: int = 32
    n_theta_inside: int = 128

    def __post_init__(self) -> None:
        if not self.dt > 0:
            raise ConfigError(f"wave dt must be positive, got {self.dt}")
        if self.t_max is not None and not self.t_max > 0:
            raise ConfigError(f"wave t_max must be positive, got {self.t_max}")
        if min(self.n_phi, self.n_theta, self.n_theta_inside) < 4:
            raise ConfigError("cone quadrature orders must be at least 4")

    def horizon(self, x: np.ndarray, source: SourcePair) -> float:
        reach = _reach(x, source)
        minimum = float(np.linalg.norm(x)) + _origin_radius(source) + 1.0
        if self.t_max is None:
            return max(minimum, reach + 1e-6)
        if self.t_max <= reach:
            raise ConfigError(
                f"t_max={self.t_max} does not clear the sources (need > {reach:.6g})",
                notes=["the far-field tail needs the cone to contain every support"],
            )
        return float(self.t_max)

    def step(self, k: float) -> float:
        return min(self.dt, 0.1 / k) if k > 0 else self.dt


def _origin_radius(source: SourcePair) -> float:
    return max((float(np.hypot(*c)) + r for c, r in source.supports), default=0.0)


def _reach(x: np.ndarray, source: SourcePair) -> float:
    return max(
        (float(np.hypot(x[0] - c[0], x[1] - c[1])) + r for c, r in source.supports), default=0.0
    )


# ---------------------------------------------------------------------------
# Cone integrals
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConeIntegral:
    """W[f](x, t) and its derivatives on a time array."""

    times: np.ndarray
    value: np.ndarray
    dt: np.ndarray
    dtt: np.ndarray
    grad: np.ndarray
    grad_dt: np.ndarray


def _theta_rule(x: np.ndarray, bump: Bump, cfg: WaveEvalConfig):
    d = np.asarray(bump.center) - x
    dist = float(np.hypot(*d))
    if dist > bump.radius:
        half = np.arcsin(bump.radius / dist)
        mid = np.arctan2(d[1], d[0])
        s, w = gauss_legendre(cfg.n_theta)
        theta = mid - half + 2.0 * half * s
        w_theta = 2.0 * half * w
    else:
        theta = 2.0 * np.pi * np.arange(cfg.n_theta_inside) / cfg.n_theta_inside
        w_theta = np.full(theta.shape, 2.0 * np.pi / cfg.n_theta_inside)
    e = np.stack([np.cos(theta), np.sin(theta)], axis=1)
    p = e @ d
    sq = np.sqrt(np.maximum(p * p - (dist * dist - bump.radius**2), 0.0))
    return e, w_theta, np.maximum(p - sq, 0.0), np.maximum(p + sq, 0.0), dist


def _bump_cone(x, times, bump: Bump, cfg: WaveEvalConfig, need) -> dict[str, np.ndarray]:
    nt = times.size
    out = {
        "value": np.zeros(nt),
        "dt": np.zeros(nt),
        "dtt": np.zeros(nt),
        "grad": np.zeros((nt, 2)),
        "grad_dt": np.zeros((nt, 2)),
    }
    e, w_theta, r_in, r_out, dist = _theta_rule(x, bump, cfg)

    zero = times == 0.0
    if np.any(zero):
        out["dt"][zero] = bump.evaluate(x[0], x[1])
        out["grad_dt"][zero] = [
            bump.evaluate(x[0], x[1], (1, 0)),
            bump.evaluate(x[0], x[1], (0, 1)),
        ]

    # U vanishes identically before the wavefront reaches the support
    live = (times > 0.0) & (times > dist - bump.radius)
    if not np.any(live):
        return out
    t = times[live][:, None]
    phi_lo = np.arcsin(np.minimum(r_in[None, :], t) / t)
    phi_hi = np.arcsin(np.minimum(r_out[None, :], t) / t)
    s_gl, w_gl = gauss_legendre(cfg.n_phi)
    span = phi_hi - phi_lo
    phi = phi_lo[..., None] + span[..., None] * s_gl
    w = span[..., None] * w_gl * w_theta[None, :, None] / (2.0 * np.pi)
    s = np.sin(phi)
    tt = np.broadcast_to(t[..., None], s.shape)
    ex = np.broadcast_to(e[None, :, 0, None], s.shape)
    ey = np.broadcast_to(e[None, :, 1, None], s.shape)
    yx = x[0] + tt * s * ex
    yy = x[1] + tt * s * ey

    def d(alpha):
        return bump.evaluate(yx, yy, alpha)

    def total(arr):
        return np.sum(w * arr, axis=(1, 2))

    need_grad = bool(need & {"dt", "dtt", "grad", "grad_dt"})
    need_hess = bool(need & {"dtt", "grad_dt"})
    b = d((0, 0)) if need & {"value", "dt"} else None
    if need_grad:
        bx, by = d((1, 0)), d((0, 1))
        b_e = bx * ex + by * ey
    if need_hess:
        bxx, bxy, byy = d((2, 0)), d((1, 1)), d((0, 2))
        he_x = bxx * ex + bxy * ey
        he_y = bxy * ex + byy * ey

    t1 = t[:, 0]
    if "value" in need:
        out["value"][live] = t1 * total(b * s)
    if "dt" in need:
        out["dt"][live] = total((b + tt * s * b_e) * s)
    if "dtt" in need:
        ehe = he_x * ex + he_y * ey
        out["dtt"][live] = total((2.0 * s * b_e + tt * s * s * ehe) * s)
    if "grad" in need:
        out["grad"][live] = t1[:, None] * np.stack([total(bx * s), total(by * s)], axis=1)
    if "grad_dt" in need:
        out["grad_dt"][live] = np.stack(
            [total((bx + tt * s * he_x) * s), total((by + tt * s * he_y) * s)], axis=1
        )
    return out


def _cone(x, times, field: BumpSum, cfg: WaveEvalConfig, need=_ALL) -> dict[str, np.ndarray]:
    x = np.asarray(x, dtype=float)
    signed = np.atleast_1d(np.asarray(times, dtype=float))
    t_abs = np.abs(signed)
    acc = {
        "value": np.zeros(t_abs.size),
        "dt": np.zeros(t_abs.size),
        "dtt": np.zeros(t_abs.size),
        "grad": np.zeros((t_abs.size, 2)),
        "grad_dt": np.zeros((t_abs.size, 2)),
    }
    for start in range(0, t_abs.size, _TIME_CHUNK):
        sl = slice(start, start + _TIME_CHUNK)
        for bump in field.terms:
            if bump.amplitude == 0.0:
                continue
            part = _bump_cone(x, t_abs[sl], bump, cfg, need)
            for key in acc:
                acc[key][sl] += part[key]
    # the cone expression is even in t
    flip = np.where(signed < 0, -1.0, 1.0)
    acc["dt"] *= flip
    acc["grad_dt"] *= flip[:, None]
    return acc


def cone_integral(x, t, field: BumpSum, cfg: WaveEvalConfig | None = None) -> ConeIntegral:
    """W[f](x, t) = (1/2pi) int_{|x-y|<|t|} f(y)/sqrt(t^2-|x-y|^2) dy with derivatives."""
    cfg = cfg or WaveEvalConfig()
    times = np.atleast_1d(np.asarray(t, dtype=float))
    acc = _cone(x, times, field, cfg)
    return ConeIntegral(times, acc["value"], acc["dt"], acc["dtt"], acc["grad"], acc["grad_dt"])


# ---------------------------------------------------------------------------
# Wave solution and traces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WaveTrace:
    times: np.ndarray
    U: np.ndarray
    U_t: np.ndarray


def wave_solution(x, t, source: SourcePair, cfg: WaveEvalConfig | None = None):
    """U(x, t); zero for t < 0."""
    cfg = cfg or WaveEvalConfig()
    times = np.atleast_1d(np.asarray(t, dtype=float))
    out = np.zeros(times.size)
    pos = times >= 0
    if np.any(pos):
        w1 = _cone(x, times[pos], source.f1, cfg, {"value"})
        w0 = _cone(x, times[pos], source.f0, cfg, {"dt"})
        out[pos] = w1["value"] - w0["dt"]
    return float(out[0]) if np.ndim(t) == 0 else out


def wave_trace(x, times, source: SourcePair, cfg: WaveEvalConfig | None = None) -> WaveTrace:
    """U and dU/dt along a nonnegative time grid."""
    cfg = cfg or WaveEvalConfig()
    times = np.asarray(times, dtype=float)
    if np.any(times < 0):
        raise ConfigError("wave traces are defined on t >= 0")
    w1 = _cone(x, times, source.f1, cfg, {"value", "dt"})
    w0 = _cone(x, times, source.f0, cfg, {"dt", "dtt"})
    return WaveTrace(times, w1["value"] - w0["dt"], w1["dt"] - w0["dtt"])


def _far_terms(x, source: SourcePair):
    """(r^2, f1 w / 2pi, f0 w / 2pi) on the sources' polar grids."""
    r2, a1, a0 = [], [], []
    for channel, bump in source.channels():
        grid = source.polar_grid(bump)
        fw = bump.evaluate(grid.x, grid.y) * grid.w / (2.0 * np.pi)
        r2.append((grid.x - x[0]) ** 2 + (grid.y - x[1]) ** 2)
        a1.append(fw if channel == 1 else np.zeros_like(fw))
        a0.append(fw if channel == 0 else np.zeros_like(fw))
    if not r2:
        return np.zeros(0), np.zeros(0), np.zeros(0)
    return np.concatenate(r2), np.concatenate(a1), np.concatenate(a0)


def far_field_u(t: float, terms) -> float:
    """U(x, t) once the cone contains every support: int f1/sqrt + f0 t/(.)^(3/2)."""
    r2, a1, a0 = terms
    g = t * t - r2
    return float(np.sum(a1 / np.sqrt(g)) + t * np.sum(a0 / g**1.5))


def far_field_u_t(t: float, terms) -> float:
    r2, a1, a0 = terms
    g = t * t - r2
    return float(-t * np.sum(a1 / g**1.5) + np.sum(a0 * (1.0 / g**1.5 - 3.0 * t * t / g**2.5)))


# ---------------------------------------------------------------------------
# Fourier link
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FourierValue:
    k: float
    value: complex
    tail: complex
    tail_bound: float
    t_max: float
    dt: float


def _simpson_nodes(t_max: float, dt: float) -> np.ndarray:
    n = int(np.ceil(t_max / dt))
    n += (-n) % 4
    return np.linspace(0.0, t_max, n + 1)


def _simpson(values: np.ndarray, h: float) -> complex:
    return integrate.simpson(values, dx=h)


def _fourier_from_trace(k: float, times, U, terms, t_max: float) -> FourierValue:
    h = times[1] - times[0]
    integrand = U * np.exp(1j * k * times)
    fine = _simpson(integrand, h)
    coarse = _simpson(integrand[::2], 2.0 * h)
    richardson = abs(fine - coarse) / 15.0

    if terms[0].size:
        re, re_err = integrate.quad(far_field_u, t_max, np.inf, args=(terms,), weight="cos", wvar=k)
        im, im_err = integrate.quad(far_field_u, t_max, np.inf, args=(terms,), weight="sin", wvar=k)
    else:
        re = im = re_err = im_err = 0.0
    tail = complex(re, im)
    value = fine + tail
    bound = float(re_err + im_err + richardson)
    return FourierValue(float(k), complex(value), tail, bound, t_max, float(h))


def temporal_fourier(
    x, k: float, source: SourcePair, cfg: WaveEvalConfig | None = None
) -> FourierValue:
    """int_0^inf U(x, t) e^{ikt} dt: Simpson on [0, T] plus the far-field tail on [T, inf)."""
    return temporal_fourier_many(x, [k], source, cfg)[0]


def temporal_fourier_many(
    x, ks, source: SourcePair, cfg: WaveEvalConfig | None = None
) -> list[FourierValue]:
    """Fourier values at several k from one time trace."""
    cfg = cfg or WaveEvalConfig()
    x = np.asarray(x, dtype=float)
    ks = [float(k) for k in ks]
    if any(k <= 0 for k in ks):
        raise ConfigError("temporal Fourier transform needs k > 0")
    t_max = cfg.horizon(x, source)
    times = _simpson_nodes(t_max, cfg.step(max(ks)))
    U = wave_solution(x, times, source, cfg)
    terms = _far_terms(x, source)
    results = []
    for k in ks:
        res = _fourier_from_trace(k, times, U, terms, t_max)
        if res.tail_bound > TAIL_TOLERANCE * abs(res.value):
            raise AccuracyError(
                f"Fourier tail estimate {res.tail_bound:.3e} too large at k={k}",
                code=codes.TAIL_TOO_LARGE,
                notes=[f"|value| = {abs(res.value):.3e}; increase t_max or refine dt"],
            )
        results.append(res)
    return results


@dataclass(frozen=True)
class FourierLinkRow:
    node: int
    k: float
    temporal: complex
    helmholtz: complex
    tail_bound: float

    @property
    def relative_error(self) -> float:
        scale = abs(self.helmholtz)
        return abs(self.temporal - self.helmholtz) / scale if scale else abs(self.temporal)


def fourier_link(
    domain: Domain,
    source: SourcePair,
    nodes,
    ks,
    cfg: WaveEvalConfig | None = None,
    *,
    threads: int | None = None,
) -> list[FourierLinkRow]:
    """Compare the temporal Fourier transform of U with the Helmholtz field, per (node, k)."""
    cfg = cfg or WaveEvalConfig()
    ks = [float(k) for k in ks]

    def one(node: int) -> list[FourierLinkRow]:
        x = domain.nodes[node]
        values = temporal_fourier_many(x, ks, source, cfg)
        u, _ = traces(x, np.array(ks, dtype=complex), source)
        return [
            FourierLinkRow(node, fv.k, fv.value, complex(u[i, 0]), fv.tail_bound)
            for i, fv in enumerate(values)
        ]

    with ThreadPoolExecutor(max_workers=threads) as pool:
        rows = [row for chunk in pool.map(one, list(nodes)) for row in chunk]
    return rows


# ---------------------------------------------------------------------------
# Parseval and energy
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ParsevalReport:
    time_side: float
    frequency_side: float
    frequency_tail_bound: float
    t_max: float
    dt: float
    omega_max: float

    @property
    def discrepancy(self) -> float:
        if self.time_side == 0.0:
            return 0.0 if self.frequency_side == 0.0 else float("inf")
        return abs(self.time_side - self.frequency_side) / self.time_side


def parseval_band(cfg: WaveEvalConfig) -> float:
    """Frequency cut-off for the Parseval check: the Nyquist frequency pi / dt.

    Never below DEFAULT_OMEGA_MAX; refining dt widens the band.
    """
    return max(DEFAULT_OMEGA_MAX, float(np.pi / cfg.dt))


def parseval_report(
    domain: Domain,
    source: SourcePair,
    grid: FrequencyGrid | None = None,
    cfg: WaveEvalConfig | None = None,
    *,
    threads: int | None = None,
) -> ParsevalReport:
    """2pi int_0^inf ||dU/dt||^2 dt against int_R w^2 ||u(., w)||^2 dw on the boundary."""
    from helmstab.functionals import tail_bound
    from helmstab.geometry import SobolevBudget

    cfg = cfg or WaveEvalConfig()
    grid = grid or FrequencyGrid(parseval_band(cfg))
    t_max = max(cfg.horizon(x, source) for x in domain.nodes)
    times = _simpson_nodes(t_max, cfg.dt)
    h = times[1] - times[0]

    def node_energy(j: int) -> float:
        x = domain.nodes[j]
        tr = wave_trace(x, times, source, cfg)
        head = _simpson(tr.U_t**2, h).real
        terms = _far_terms(x, source)
        if not terms[0].size:
            return 0.0
        tail, _ = integrate.quad(lambda t: far_field_u_t(t, terms) ** 2, t_max, np.inf)
        return head + tail

    with ThreadPoolExecutor(max_workers=threads) as pool:
        energies = np.array(list(pool.map(node_energy, range(domain.node_count))))
    time_side = 2.0 * np.pi * float(energies @ domain.weights)

    data = sweep(domain, source, grid, threads=threads)
    density = (grid.samples**2)[:, None] * np.abs(data.u) ** 2
    frequency_side = 2.0 * float(grid.weights @ (density @ domain.weights))
    budget = SobolevBudget.of(source)
    freq_tail = 2.0 * tail_bound(grid.K, budget)
    logger.info("parseval: time %.6e, frequency %.6e", time_side, frequency_side)
    return ParsevalReport(time_side, frequency_side, freq_tail, t_max, float(h), grid.K)


def parseval_check(
    domain: Domain,
    source: SourcePair,
    grid: FrequencyGrid | None = None,
    cfg: WaveEvalConfig | None = None,
) -> float:
    """Relative discrepancy |LHS - RHS| / LHS of the Parseval identity."""
    return parseval_report(domain, source, grid, cfg).discrepancy


@dataclass(frozen=True)
class EnergyReport:
    times: np.ndarray
    energy: np.ndarray
    initial: float

    @property
    def constants(self) -> np.ndarray:
        """E(t) / ((1 + t) E0) where E = ||U||_(1) + ||U_t||_(0)."""
        if self.initial == 0.0:
            return np.zeros_like(self.energy)
        return self.energy / ((1.0 + self.times) * self.initial)

    @property
    def fitted_constant(self) -> float:
        return float(self.constants.max(initial=0.0))


def energy_growth(
    source: SourcePair,
    times,
    cfg: WaveEvalConfig | None = None,
    *,
    points_per_axis: int = 24,
) -> EnergyReport:
    """||U(., t)||_(1) + ||U_t(., t)||_(0) on a grid covering the region reached by time t."""
    from helmstab.geometry import sobolev_norms

    cfg = cfg or WaveEvalConfig()
    times = np.asarray(times, dtype=float)
    initial = sobolev_norms(source.f0, 1)[1] + sobolev_norms(source.f1, 0)[0]
    if source.is_zero:
        return EnergyReport(times, np.zeros_like(times), 0.0)
    reach = float(times.max())
    supports = source.supports
    box = (
        min(c[0] - r for c, r in supports) - reach,
        max(c[0] + r for c, r in supports) + reach,
        min(c[1] - r for c, r in supports) - reach,
        max(c[1] + r for c, r in supports) + reach,
    )
    order = 4
    panel = max(box[1] - box[0], box[3] - box[2]) / max(1, points_per_axis // order)
    grid = InteriorGrid.covering(box, panel, order)

    u2 = np.zeros(times.size)
    grad2 = np.zeros(times.size)
    ut2 = np.zeros(times.size)
    for xi, yi, wi in zip(grid.x, grid.y, grid.w, strict=True):
        x = np.array([xi, yi])
        w1 = _cone(x, times, source.f1, cfg, {"value", "dt", "grad"})
        w0 = _cone(x, times, source.f0, cfg, {"dt", "dtt", "grad_dt"})
        U = w1["value"] - w0["dt"]
        gU = w1["grad"] - w0["grad_dt"]
        Ut = w1["dt"] - w0["dtt"]
        u2 += wi * U * U
        grad2 += wi * np.sum(gU * gU, axis=1)
        ut2 += wi * Ut * Ut
    energy = np.sqrt(u2 + grad2) + np.sqrt(ut2)
    return EnergyReport(times, energy, float(initial))


def write_traces(path: Path, rows: list[tuple[int, WaveTrace]]) -> Path:
    """CSV (t, node_index, U, dU_dt) for offline plotting."""
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["t", "node_index", "U", "dU_dt"])
        for node, tr in rows:
            for t, u, ut in zip(tr.times, tr.U, tr.U_t, strict=True):
                writer.writerow([format(t, ".17g"), node, format(u, ".17g"), format(ut, ".17g")])
    return path


__all__ = [
    "ConeIntegral",
    "EnergyReport",
    "FourierLinkRow",
    "FourierValue",
    "ParsevalReport",
    "WaveEvalConfig",
    "WaveTrace",
    "cone_integral",
    "energy_growth",
    "far_field_u",
    "fourier_link",
    "parseval_band",
    "parseval_check",
    "parseval_report",
    "temporal_fourier",
    "temporal_fourier_many",
    "wave_solution",
    "wave_trace",
    "write_traces",
]
