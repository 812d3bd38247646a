"""Exception hierarchy. Each error maps to a diagnostic code and a CLI exit status."""

from __future__ import annotations

from helmstab.diagnostics import Diagnostic, DiagnosticCode, codes

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_ACCURACY = 3
EXIT_GEOMETRY = 4


class HelmstabError(Exception):
    """Base class for all helmstab failures."""

    default_code: DiagnosticCode = codes.INTERNAL_ERROR
    exit_status: int = 1

    def __init__(
        self,
        message: str,
        *,
        code: DiagnosticCode | None = None,
        notes: list[str] | None = None,
    ) -> None:
        super().__init__(message)
        self.message = message
        self.code = code or self.default_code
        self.notes = list(notes or [])

    def to_diagnostic(self) -> Diagnostic:
        diag = Diagnostic.error(self.code, self.message)
        for note in self.notes:
            diag.note(note)
        return diag


class ConfigError(HelmstabError, ValueError):
    """Invalid configuration or parameters."""

    default_code = codes.INVALID_CONFIG
    exit_status = EXIT_CONFIG


class DomainError(HelmstabError, ValueError):
    """Argument outside the domain of an operation."""

    default_code = codes.DOMAIN_VIOLATION
    exit_status = EXIT_CONFIG


class RangeError(DomainError):
    """Argument beyond an overflow-safe cap."""

    default_code = codes.RANGE_VIOLATION


class AccuracyError(HelmstabError):
    """A numerical accuracy guard tripped."""

    default_code = codes.ACCURACY_LOST
    exit_status = EXIT_ACCURACY


class ConditioningError(AccuracyError):
    """Source basis too close to linearly dependent."""

    default_code = codes.ILL_CONDITIONED_BASIS


class GeometryError(HelmstabError):
    """Scene geometry violates the support/separation conditions."""

    default_code = codes.SUPPORT_TOUCHES_BOUNDARY
    exit_status = EXIT_GEOMETRY
