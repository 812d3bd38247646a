"""Domains, bump sources, interior grids and Sobolev norms."""

from helmstab.geometry.bumps import Bump, BumpSum, make_bump, multi_indices
from helmstab.geometry.domain import Domain, make_disk, make_polygon
from helmstab.geometry.grids import InteriorGrid, PolarDensity, gauss_legendre
from helmstab.geometry.norms import SobolevBudget, sobolev_norms
from helmstab.geometry.source import SourcePair, separation

__all__ = [
    "Bump",
    "BumpSum",
    "Domain",
    "InteriorGrid",
    "PolarDensity",
    "SobolevBudget",
    "SourcePair",
    "gauss_legendre",
    "make_bump",
    "make_disk",
    "make_polygon",
    "multi_indices",
    "separation",
    "sobolev_norms",
]
