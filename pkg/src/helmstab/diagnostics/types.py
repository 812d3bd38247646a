"""Diagnostic values produced by numerical checks and CLI runs.

Fatal problems travel as exceptions (see ``helmstab.errors``); each of them
converts to a Diagnostic at the CLI boundary. Non-fatal findings such as a
negative bound margin or an unreachable discrepancy target are collected as
warning diagnostics and rendered next to the artifacts.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable
from dataclasses import dataclass, field

from helmstab.diagnostics.codes import DiagnosticCode


class Level(enum.IntEnum):
    INFO = 0
    WARNING = 1
    ERROR = 2

    @property
    def label(self) -> str:
        return self.name.lower()


@dataclass
class Diagnostic:
    level: Level
    code: DiagnosticCode
    message: str
    notes: list[str] = field(default_factory=list)

    @classmethod
    def error(cls, code: DiagnosticCode, message: str) -> Diagnostic:
        return cls(Level.ERROR, code, message)

    @classmethod
    def warning(cls, code: DiagnosticCode, message: str) -> Diagnostic:
        return cls(Level.WARNING, code, message)

    @classmethod
    def info(cls, code: DiagnosticCode, message: str) -> Diagnostic:
        return cls(Level.INFO, code, message)

    def note(self, note: str) -> Diagnostic:
        self.notes.append(note)
        return self

    @property
    def is_error(self) -> bool:
        return self.level is Level.ERROR

    def to_dict(self) -> dict:
        return {
            "level": self.level.label,
            "code": str(self.code),
            "message": self.message,
            "notes": list(self.notes),
        }

    def __str__(self) -> str:
        return f"{self.level.label}[{self.code}]: {self.message}"


@dataclass
class DiagnosticReport:
    """Diagnostics collected over one run, plus the artifacts it wrote."""

    diagnostics: list[Diagnostic] = field(default_factory=list)
    artifacts: list[str] = field(default_factory=list)

    def add(self, diag: Diagnostic | None) -> None:
        if diag is not None:
            self.diagnostics.append(diag)

    def extend(self, diags: Iterable[Diagnostic]) -> None:
        self.diagnostics.extend(diags)

    @property
    def failed(self) -> bool:
        """True once any check reported an error; such runs exit with the accuracy status."""
        return any(d.is_error for d in self.diagnostics)

    @property
    def max_level(self) -> Level | None:
        return max((d.level for d in self.diagnostics), default=None)

    def codes(self) -> list[str]:
        return [str(d.code) for d in self.diagnostics]
