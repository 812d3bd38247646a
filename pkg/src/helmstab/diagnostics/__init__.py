"""Diagnostic system: codes, values, and rendering."""

from helmstab.diagnostics import codes
from helmstab.diagnostics.codes import DiagnosticCode
from helmstab.diagnostics.render import render_json, render_text
from helmstab.diagnostics.types import Diagnostic, DiagnosticReport, Level

__all__ = [
    "Diagnostic",
    "DiagnosticCode",
    "DiagnosticReport",
    "Level",
    "codes",
    "render_json",
    "render_text",
]
