"""Frequency functionals of the boundary data and the explicit bounds on them.

    I1(k)    = 2 int_0^k w^2 ||u(., w)||^2 dw
    I2(k)    = 2 int_0^k w^2 ||grad u(., w)||^2 dw
    I2eps(k) = 2 int_0^k ||grad u(., w)||^2 dw

For complex k the integrals run along the segment w = k s, s in (0, 1),
with conj(u) continued analytically as the companion field u^-.
"""

from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass, field

import numpy as np

from helmstab.diagnostics import Diagnostic, codes
from helmstab.errors import ConfigError, DomainError
from helmstab.forward import FrequencyGrid, KernelMethod, field_pair, sweep
from helmstab.geometry import Domain, SobolevBudget, SourcePair, gauss_legendre

logger = logging.getLogger(__name__)

SEGMENT_ORDER = 64
TAIL_BAND_FACTOR = 2.0
TAIL_K_MIN = 16.0
_HM_BRANCH = 2.0**0.25


class FunctionalKind(enum.Enum):
    I1 = "I1"
    I2 = "I2"
    I2EPS = "I2eps"

    @classmethod
    def parse(cls, value: str | FunctionalKind) -> FunctionalKind:
        if isinstance(value, cls):
            return value
        try:
            return cls(value)
        except ValueError:
            raise ConfigError(
                f"unknown functional {value!r}", notes=["use 'I1', 'I2' or 'I2eps'"]
            ) from None


@dataclass(frozen=True)
class BoundReport:
    """A computed functional next to the explicit bound it must respect."""

    name: str
    k: complex
    computed: float
    bound: float
    inputs: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not (math.isfinite(self.computed) and math.isfinite(self.bound)):
            raise DomainError(
                f"{self.name} at k={self.k}: non-finite report "
                f"(computed={self.computed}, bound={self.bound})",
                code=codes.RANGE_VIOLATION,
            )

    @property
    def margin(self) -> float:
        return self.bound - self.computed

    def diagnostics(self) -> list[Diagnostic]:
        if self.margin >= 0:
            return []
        return [
            Diagnostic.warning(
                codes.NEGATIVE_MARGIN,
                f"{self.name} exceeds its bound at k={self.k:g}: margin {self.margin:.3e}",
            )
        ]

    def to_row(self) -> dict:
        return {
            "functional": self.name,
            "k_re": self.k.real,
            "k_im": self.k.imag,
            "computed": self.computed,
            "bound": self.bound,
            "margin": self.margin,
        }


def _check_k(k) -> complex:
    k = complex(k)
    if not k.real > 0:
        raise DomainError(
            f"functional argument {k} needs a positive real part",
            code=codes.DOMAIN_VIOLATION,
            notes=["the branch cut (-inf, 0] and the left half-plane are excluded"],
        )
    return k


def boundary_functional(
    domain: Domain,
    source: SourcePair,
    k,
    kind: str | FunctionalKind = FunctionalKind.I1,
    *,
    order: int = SEGMENT_ORDER,
    method: KernelMethod | str = KernelMethod.ADDITION,
) -> complex:
    """I1, I2 or I2eps at k, by Gauss-Legendre along w = k s."""
    kind = FunctionalKind.parse(kind)
    k = _check_k(k)
    if source.is_zero:
        return 0j
    s, w = gauss_legendre(order)
    omega = k * s
    u_plus, u_minus, g_plus, g_minus = field_pair(domain.nodes, omega, source, method=method)
    if kind is FunctionalKind.I1:
        density = (u_plus * u_minus) @ domain.weights
    else:
        density = np.sum(g_plus * g_minus, axis=2) @ domain.weights
    if kind is not FunctionalKind.I2EPS:
        density = density * omega**2
    return complex(2.0 * k * np.sum(w * density))


def functional_bound(
    k,
    norms: SobolevBudget,
    domain: Domain,
    kind: str | FunctionalKind = FunctionalKind.I1,
    *,
    computed: complex | None = None,
    source: SourcePair | None = None,
) -> BoundReport:
    """|I(k)| against (pi/2)|dOmega| d [..] e^{2 d |k2|} / k1.

    I1 carries (|k|^3 ||f1||_(0)^2 / 3 + |k|^5 ||f0||_(0)^2 / 5); both gradient
    functionals carry (|k| ||f1||_(1)^2 / 3 + |k|^3 ||f0||_(1)^2 / 5).
    """
    kind = FunctionalKind.parse(kind)
    k = _check_k(k)
    if computed is None:
        if source is None:
            raise ConfigError("functional_bound needs either a computed value or the source")
        computed = boundary_functional(domain, source, k, kind)
    mod = abs(k)
    if kind is FunctionalKind.I1:
        f1, f0 = norms.f1_norms[0] ** 2, norms.f0_norms[0] ** 2
        bracket = mod**3 * f1 / 3.0 + mod**5 * f0 / 5.0
    else:
        f1, f0 = norms.f1_norms[1] ** 2, norms.f0_norms[1] ** 2
        bracket = mod * f1 / 3.0 + mod**3 * f0 / 5.0
    d = domain.diameter
    bound = 0.5 * np.pi * domain.perimeter * d * bracket * np.exp(2 * d * abs(k.imag)) / k.real
    return BoundReport(
        kind.value,
        k,
        float(abs(computed)),
        float(bound),
        {"perimeter": domain.perimeter, "d": d, "f0_sq": f0, "f1_sq": f1},
    )


def certify_functionals(
    domain: Domain,
    source: SourcePair,
    ks,
    kinds=(FunctionalKind.I1, FunctionalKind.I2),
) -> list[BoundReport]:
    norms = SobolevBudget.of(source)
    reports = []
    for kind in kinds:
        for k in ks:
            reports.append(functional_bound(k, norms, domain, kind, source=source))
    for rep in reports:
        logger.debug(
            "%s(k=%s): computed %.4e bound %.4e", rep.name, rep.k, rep.computed, rep.bound
        )
    return reports


def harmonic_measure_lb(k: float, K: float) -> float:
    """Lower bound for the harmonic measure of [0, K] in the slit sector, seen from k."""
    if not (k > 0 and K > 0):
        raise DomainError(f"harmonic measure needs k, K > 0 (got k={k}, K={K})")
    if k < _HM_BRANCH * K:
        return 0.5
    return 1.0 / (np.pi * np.sqrt((k / K) ** 4 - 1.0))


def _check_eps(eps: float) -> None:
    if not 0 < eps < 1:
        raise DomainError(
            f"data norm epsilon must lie in (0, 1), got {eps}",
            code=codes.DATA_NORM_NOT_SMALL,
        )


def _check_budget(M: float) -> None:
    if M < 1:
        raise DomainError(f"M must be at least 1, got {M}")


def continuation_bound(
    k: float, K: float, eps: float, M: float, d: float, *, scaled: bool = False
) -> float:
    """e^{2(d+1)k} eps^{2 mu(k)} M^2 for k > K; without the exponential when ``scaled``."""
    _check_eps(eps)
    _check_budget(M)
    if not k > K:
        raise DomainError(f"continuation bound applies for k > K (k={k}, K={K})")
    mu = harmonic_measure_lb(k, K)
    growth = 1.0 if scaled else np.exp(2 * (d + 1) * k)
    return float(growth * eps ** (2 * mu) * M**2)


def tail_bound(k: float, norms: SobolevBudget, c_tail: float = 1.0) -> float:
    """c_tail k^-1 (||f0||_(4)^2 + ||f1||_(3)^2)."""
    if k < 1:
        raise DomainError(f"tail bound holds for k >= 1, got {k}")
    return c_tail * norms.smoothness_square / k


def choose_truncation(K: float, E: float) -> float:
    """Truncation level balancing the data window against the unknown tail."""
    if not K > 1:
        raise DomainError(f"K must exceed 1, got {K}")
    if not E > 0:
        raise DomainError(f"E must be positive, got {E}")
    if _HM_BRANCH * K ** (1.0 / 3.0) < E**0.25:
        return K ** (2.0 / 3.0) * E**0.25
    return float(K)


def stability_rhs(K: float, eps: float, M: float) -> float:
    """eps^2 + M^2 / (1 + K^{2/3} E^{1/4}) with E = -ln eps."""
    if not K > 1:
        raise DomainError(f"K must exceed 1, got {K}")
    _check_eps(eps)
    _check_budget(M)
    E = -np.log(eps)
    return float(eps**2 + M**2 / (1.0 + K ** (2.0 / 3.0) * E**0.25))


def assembled_tail_bound(K: float, E: float, M: float, d: float, C: float = 1.0) -> float:
    """C M^2 / (K^2 E^{3/2} (1 - pi (d+1) E^{-1/4})^3), the bound on |I1| at the chosen truncation.

    Follows from e^{-t} <= 6 / t^3 for t > 0 and needs pi (d+1) E^{-1/4} < 1/2.
    """
    if not (K > 1 and E > 0):
        raise DomainError(f"need K > 1 and E > 0 (K={K}, E={E})")
    q = np.pi * (d + 1) * E**-0.25
    if q >= 0.5:
        raise DomainError(
            f"E = {E:.4g} too small for the assembled bound: pi (d+1) E^-1/4 = {q:.3g}",
            notes=["the assembled bound assumes pi (d+1) E^-1/4 < 1/2"],
        )
    return float(C * M**2 / (K**2 * E**1.5 * (1.0 - q) ** 3))


def empirical_tail(
    domain: Domain,
    source: SourcePair,
    k: float,
    *,
    omega_max: float | None = None,
    points_per_unit: int = 8,
    threads: int | None = None,
) -> float:
    """2 int_k^{omega_max} w^2 ||u(., w)||^2 dw, with omega_max = TAIL_BAND_FACTOR k by default.

    Past the peak near w R = 7 the integrand decays like w^-10, so for k in
    the asymptotic range the part beyond TAIL_BAND_FACTOR k is below 1%.
    Keep w R well under 2 n_radial: the radial rule stops resolving J0 there.
    """
    if omega_max is None:
        omega_max = TAIL_BAND_FACTOR * k
    if not omega_max > k > 0:
        raise ConfigError(f"tail band ({k}, {omega_max}] is empty")
    grid = FrequencyGrid.band(k, omega_max, points_per_unit=points_per_unit)
    data = sweep(domain, source, grid, threads=threads)
    density = (grid.samples**2)[:, None] * np.abs(data.u) ** 2
    return 2.0 * float(grid.weights @ (density @ domain.weights))


def fit_tail_constant(
    domain: Domain,
    source: SourcePair,
    ks,
    *,
    omega_max: float | None = None,
    threads: int | None = None,
) -> tuple[float, list[BoundReport]]:
    """Smallest c_tail making tail_bound dominate the empirical tail at every k.

    Below TAIL_K_MIN the tail has not reached its 1/k decay; such ks are
    reported but enter the fit only when no k reaches TAIL_K_MIN.
    """
    norms = SobolevBudget.of(source)
    tails = [empirical_tail(domain, source, k, omega_max=omega_max, threads=threads) for k in ks]
    scale = norms.smoothness_square
    samples = list(zip(ks, tails, strict=True))
    fitted = [(k, t) for k, t in samples if k >= TAIL_K_MIN] or samples
    if len(fitted) < len(samples):
        logger.info("tail fit skips %d k below %g", len(samples) - len(fitted), TAIL_K_MIN)
    c_tail = max((k * t / scale for k, t in fitted), default=0.0)
    # rounded up so the fitted bound dominates every sample in floating point
    c_tail = max(c_tail * (1 + 1e-12), np.finfo(float).tiny)
    reports = [
        BoundReport("tail", complex(k), t, tail_bound(k, norms, c_tail), {"c_tail": c_tail})
        for k, t in zip(ks, tails, strict=True)
    ]
    return float(c_tail), reports


def fit_continuation_constant(
    domain: Domain,
    source: SourcePair,
    K: float,
    ks,
    eps: float,
    M: float,
) -> tuple[float, list[BoundReport]]:
    """Constant C with |I1(k)| <= C e^{2(d+1)k} eps^{2 mu(k)} M^2 on the sampled k > K.

    Reports carry both sides multiplied by e^{-2(d+1)k}, which keeps them finite.
    """
    d = domain.diameter
    values, bounds = [], []
    for k in ks:
        bounds.append(continuation_bound(k, K, eps, M, d, scaled=True))
        value = abs(boundary_functional(domain, source, k, FunctionalKind.I1))
        values.append(value * np.exp(-2 * (d + 1) * k))
    fitted = max((v / b for v, b in zip(values, bounds, strict=True)), default=0.0)
    fitted *= 1 + 1e-12
    reports = [
        BoundReport(
            "continuation", complex(k), v, max(fitted, 1.0) * b, {"C": fitted, "K": K, "eps": eps}
        )
        for k, v, b in zip(ks, values, bounds, strict=True)
    ]
    return float(fitted), reports


def data_window_check(
    domain: Domain, source: SourcePair, K: float, eps2: float, ks
) -> list[BoundReport]:
    """|I1(k)| e^{-2(d+1)k} <= eps^2 for k in (0, K]."""
    d = domain.diameter
    reports = []
    for k in ks:
        if not 0 < k <= K:
            raise ConfigError(f"data window samples must lie in (0, K], got {k}")
        value = abs(boundary_functional(domain, source, k, FunctionalKind.I1))
        reports.append(
            BoundReport("window", complex(k), value * np.exp(-2 * (d + 1) * k), eps2, {"K": K})
        )
    return reports


__all__ = [
    "BoundReport",
    "FunctionalKind",
    "assembled_tail_bound",
    "boundary_functional",
    "certify_functionals",
    "choose_truncation",
    "continuation_bound",
    "data_window_check",
    "empirical_tail",
    "fit_continuation_constant",
    "fit_tail_constant",
    "harmonic_measure_lb",
    "functional_bound",
    "stability_rhs",
    "tail_bound",
]
