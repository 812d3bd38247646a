"""Shared output formatting for CLI commands."""

from __future__ import annotations

import json

import click

from helmstab.diagnostics import DiagnosticReport, render_json, render_text


def format_report(
    report: DiagnosticReport,
    *,
    command: str,
    summary: dict | None = None,
    output_format: str = "json",
) -> str:
    if output_format == "json":
        envelope: dict[str, object] = {"command": command}
        envelope.update(render_json(report))
        if summary:
            envelope["summary"] = summary
        return json.dumps(envelope, indent=2, sort_keys=True, default=str)

    lines = [f"{command}: {'failed' if report.failed else 'ok'}"]
    for key, value in (summary or {}).items():
        lines.append(f"  {key}: {value}")
    body = render_text(report)
    if body:
        lines.append(body)
    return "\n".join(lines)


def emit_error(report: DiagnosticReport, *, command: str) -> None:
    """Errors are always JSON on stdout so scripts can parse them."""
    click.echo(format_report(report, command=command, output_format="json"))
