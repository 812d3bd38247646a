"""Regularized reconstruction of the source pair and the increasing-stability experiment."""

from helmstab.inverse.basis import BasisSpec, SourceBasis, make_basis
from helmstab.inverse.experiment import (
    SMOOTH_BASIS,
    ExperimentConfig,
    StabilityReport,
    StabilityRow,
    increasing_stability_experiment,
    row_seed,
    stability_row,
)
from helmstab.inverse.matrix import ForwardMatrix, assemble, data_vector
from helmstab.inverse.metrics import coefficient_error, error_metrics
from helmstab.inverse.noise import add_noise, noise_norm
from helmstab.inverse.solve import (
    ReconstructionResult,
    Regularization,
    RegularizationMode,
    SolveStatus,
    reconstruct,
)

__all__ = [
    "SMOOTH_BASIS",
    "BasisSpec",
    "ExperimentConfig",
    "ForwardMatrix",
    "ReconstructionResult",
    "Regularization",
    "RegularizationMode",
    "SolveStatus",
    "SourceBasis",
    "StabilityReport",
    "StabilityRow",
    "add_noise",
    "assemble",
    "coefficient_error",
    "data_vector",
    "error_metrics",
    "increasing_stability_experiment",
    "make_basis",
    "noise_norm",
    "reconstruct",
    "row_seed",
    "stability_row",
]
