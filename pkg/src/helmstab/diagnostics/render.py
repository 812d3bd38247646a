"""Render a DiagnosticReport for the terminal (text) or for scripts (JSON)."""

from __future__ import annotations

from helmstab.diagnostics.types import DiagnosticReport


def render_json(report: DiagnosticReport) -> dict:
    return {
        "status": "error" if report.failed else "ok",
        "artifacts": list(report.artifacts),
        "diagnostics": [d.to_dict() for d in report.diagnostics],
    }


def render_text(report: DiagnosticReport) -> str:
    lines: list[str] = []
    for d in report.diagnostics:
        lines.append(str(d))
        lines.extend(f"  = note: {note}" for note in d.notes)
    lines.extend(f"wrote {name}" for name in report.artifacts)
    return "\n".join(lines)
