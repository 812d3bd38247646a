"""Stable, searchable diagnostic code registry.

Ranges:
- H0001: General (internal failures)
- H01xx: Configuration
- H02xx: Geometry
- H03xx: Numerical accuracy
- H04xx: Bound certification
- H05xx: Regularization
- H06xx: Informational
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class DiagnosticCode:
    value: int

    def __str__(self) -> str:
        return f"H{self.value:04d}"


# General
INTERNAL_ERROR = DiagnosticCode(1)

# Configuration (H01xx)
INVALID_CONFIG = DiagnosticCode(101)
UNKNOWN_KEY = DiagnosticCode(102)
DOMAIN_VIOLATION = DiagnosticCode(103)
RANGE_VIOLATION = DiagnosticCode(104)
UNSUPPORTED = DiagnosticCode(105)
GRID_MISMATCH = DiagnosticCode(106)

# Geometry (H02xx)
SUPPORT_TOUCHES_BOUNDARY = DiagnosticCode(201)
SELF_INTERSECTING_POLYGON = DiagnosticCode(202)
SINGULAR_KERNEL = DiagnosticCode(203)

# Numerical accuracy (H03xx)
ACCURACY_LOST = DiagnosticCode(301)
TAIL_TOO_LARGE = DiagnosticCode(302)
CROSS_CHECK_FAILED = DiagnosticCode(303)
ILL_CONDITIONED_BASIS = DiagnosticCode(304)

# Bound certification (H04xx)
NEGATIVE_MARGIN = DiagnosticCode(401)

# Regularization (H05xx)
DISCREPANCY_UNREACHABLE = DiagnosticCode(501)
DATA_NORM_NOT_SMALL = DiagnosticCode(502)

# Informational (H06xx)
ARTIFACT_WRITTEN = DiagnosticCode(601)
