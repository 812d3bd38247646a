"""Radiating field traces, frequency sweeps and the data norm."""

from helmstab.forward.data import (
    CauchyDataSet,
    NoiseInfo,
    epsilon_norm,
    read_dataset,
    write_dataset,
)
from helmstab.forward.grid import FrequencyGrid
from helmstab.forward.kernel import (
    KernelMethod,
    SectorPoint,
    check_sector,
    field,
    field_growth_bound,
    field_pair,
    grad_field,
    traces,
)
from helmstab.forward.sweep import sweep

__all__ = [
    "CauchyDataSet",
    "FrequencyGrid",
    "KernelMethod",
    "NoiseInfo",
    "SectorPoint",
    "check_sector",
    "epsilon_norm",
    "field",
    "field_growth_bound",
    "field_pair",
    "grad_field",
    "read_dataset",
    "sweep",
    "traces",
    "write_dataset",
]
