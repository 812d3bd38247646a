"""Ridge reconstruction with a fixed or discrepancy-selected parameter.

The regularization parameter is relative: the absolute ridge weight is
``alpha * s_max**2`` where ``s_max`` is the largest singular value of the
weighted forward matrix, so configs do not depend on the data scale.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field

import numpy as np

from helmstab.diagnostics import Diagnostic, codes
from helmstab.errors import ConditioningError, ConfigError
from helmstab.forward import CauchyDataSet
from helmstab.geometry import SourcePair
from helmstab.inverse.matrix import ForwardMatrix
from helmstab.inverse.noise import noise_norm

logger = logging.getLogger(__name__)

ALPHA_MIN = 1e-16
ALPHA_MAX = 1e2
DISCREPANCY_TOLERANCE = 0.05
_MAX_BISECTIONS = 200


class RegularizationMode(enum.Enum):
    FIXED = "fixed"
    DISCREPANCY = "discrepancy"

    @classmethod
    def parse(cls, value: str | RegularizationMode) -> RegularizationMode:
        if isinstance(value, cls):
            return value
        try:
            return cls(value)
        except ValueError:
            raise ConfigError(
                f"unknown regularization mode {value!r}",
                notes=["use 'fixed' or 'discrepancy'"],
            ) from None


class SolveStatus(enum.Enum):
    FIXED = "fixed"
    CONVERGED = "converged"
    MODEL_ERROR = "model_error"
    UNREACHABLE = "unreachable"


@dataclass(frozen=True)
class Regularization:
    mode: RegularizationMode = RegularizationMode.FIXED
    alpha: float = 1e-8
    tau: float = 1.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "mode", RegularizationMode.parse(self.mode))
        if not self.alpha > 0:
            raise ConfigError(f"alpha must be positive, got {self.alpha}")
        if not self.tau > 0:
            raise ConfigError(f"discrepancy factor tau must be positive, got {self.tau}")

    @classmethod
    def fixed(cls, alpha: float) -> Regularization:
        return cls(RegularizationMode.FIXED, alpha)

    @classmethod
    def discrepancy(cls, tau: float = 1.0) -> Regularization:
        return cls(RegularizationMode.DISCREPANCY, tau=tau)


@dataclass(frozen=True, eq=False)
class ReconstructionResult:
    coefficients: np.ndarray
    fields: SourcePair
    residual: float
    alpha: float
    alpha_abs: float
    status: SolveStatus
    target: float | None = None
    diagnostics: list[Diagnostic] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "alpha_abs": self.alpha_abs,
            "residual": self.residual,
            "status": self.status.value,
            "target": self.target,
            "coefficients": [float(c) for c in self.coefficients],
        }


@dataclass(frozen=True, eq=False)
class _Spectral:
    """Thin SVD of A with the data projected onto its left singular vectors."""

    s: np.ndarray
    Vt: np.ndarray
    beta: np.ndarray
    outside: float

    @classmethod
    def of(cls, A: np.ndarray, b: np.ndarray) -> _Spectral:
        U, s, Vt = np.linalg.svd(A, full_matrices=False)
        beta = U.T @ b
        outside = max(float(b @ b - beta @ beta), 0.0)
        return cls(s, Vt, beta, outside)

    @property
    def s_max(self) -> float:
        return float(self.s[0]) if self.s.size else 0.0

    def solve(self, alpha_abs: float) -> np.ndarray:
        return self.Vt.T @ (self.s / (self.s**2 + alpha_abs) * self.beta)

    def residual(self, alpha_abs: float) -> float:
        damp = alpha_abs / (self.s**2 + alpha_abs)
        return float(np.sqrt(np.sum((damp * self.beta) ** 2) + self.outside))


def _bisect_alpha(sv: _Spectral, target: float) -> tuple[float, bool]:
    """Relative alpha whose residual lies within the tolerance of target."""
    scale = sv.s_max**2
    lo, hi = np.log(ALPHA_MIN), np.log(ALPHA_MAX)
    # residual grows monotonically with alpha
    for _ in range(_MAX_BISECTIONS):
        mid = 0.5 * (lo + hi)
        r = sv.residual(np.exp(mid) * scale)
        if abs(r - target) <= DISCREPANCY_TOLERANCE * target:
            return float(np.exp(mid)), True
        if r < target:
            lo = mid
        else:
            hi = mid
    return float(np.exp(0.5 * (lo + hi))), False


def _discrepancy_alpha(
    sv: _Spectral, target: float
) -> tuple[float, SolveStatus, float, Diagnostic | None]:
    """(alpha, status, effective target, warning) for the discrepancy rule.

    When the residual floor r_min at ALPHA_MIN already exceeds the target, the
    data carry model error the basis cannot represent. The rule then aims at
    sqrt(target^2 + r_min^2) and reports status ``model_error``.
    """
    scale = sv.s_max**2
    r_lo = sv.residual(ALPHA_MIN * scale)
    r_hi = sv.residual(ALPHA_MAX * scale)

    def unreachable(alpha: float, residual: float) -> tuple[float, SolveStatus, float, Diagnostic]:
        diag = Diagnostic.warning(
            codes.DISCREPANCY_UNREACHABLE,
            f"residual target {target:.3e} not reachable; using alpha={alpha:.3e}",
        ).note(f"residual at that alpha is {residual:.3e}")
        return alpha, SolveStatus.UNREACHABLE, target, diag

    if target <= 0:
        return unreachable(ALPHA_MIN, r_lo)

    status, diag = SolveStatus.CONVERGED, None
    if r_lo > target * (1 + DISCREPANCY_TOLERANCE):
        floor = r_lo
        target = float(np.hypot(target, floor))
        status = SolveStatus.MODEL_ERROR
        diag = (
            Diagnostic.warning(
                codes.DISCREPANCY_UNREACHABLE,
                f"residual floor {floor:.3e} exceeds the noise target; "
                f"aiming at {target:.3e} instead",
            )
            .note("the data are not in the span of the basis")
            .note("effective target is sqrt(noise_target^2 + floor^2)")
        )
    if r_hi < target * (1 - DISCREPANCY_TOLERANCE):
        return unreachable(ALPHA_MAX, r_hi)

    alpha, converged = _bisect_alpha(sv, target)
    if not converged:
        return unreachable(alpha, sv.residual(alpha * scale))
    return alpha, status, target, diag


def reconstruct(
    matrix: ForwardMatrix,
    data: CauchyDataSet,
    regularization: Regularization | None = None,
) -> ReconstructionResult:
    """Minimize ||A c - b||^2 + alpha_abs ||c||^2 for the weighted data vector b."""
    reg = regularization or Regularization()
    b = matrix.check_data(data)
    sv = _Spectral.of(matrix.A, b)
    if sv.s_max == 0:
        raise ConditioningError("forward matrix is identically zero")

    diagnostics: list[Diagnostic] = []
    target = None
    if reg.mode is RegularizationMode.FIXED:
        alpha, status = reg.alpha, SolveStatus.FIXED
    else:
        if data.noise is None:
            raise ConfigError(
                "discrepancy selection needs noisy data",
                notes=["add noise first or use a fixed alpha"],
            )
        target = reg.tau * noise_norm(data)
        alpha, status, target, diag = _discrepancy_alpha(sv, target)
        if diag is not None:
            diagnostics.append(diag)

    alpha_abs = alpha * sv.s_max**2
    c = sv.solve(alpha_abs)
    residual = float(np.linalg.norm(matrix.A @ c - b))
    logger.info(
        "reconstructed %d coefficients: alpha=%.3e residual=%.3e (%s)",
        c.size, alpha, residual, status.value,
    )
    return ReconstructionResult(
        coefficients=c,
        fields=matrix.basis.fields(c),
        residual=residual,
        alpha=float(alpha),
        alpha_abs=float(alpha_abs),
        status=status,
        target=target,
        diagnostics=diagnostics,
    )
