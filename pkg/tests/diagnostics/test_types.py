"""Tests for diagnostic values, error conversion and rendering."""

from helmstab.diagnostics import (
    Diagnostic,
    DiagnosticReport,
    Level,
    codes,
    render_json,
    render_text,
)
from helmstab.errors import (
    EXIT_ACCURACY,
    EXIT_CONFIG,
    EXIT_GEOMETRY,
    AccuracyError,
    ConditioningError,
    ConfigError,
    GeometryError,
    RangeError,
)


def test_code_formatting():
    assert str(codes.INTERNAL_ERROR) == "H0001"
    assert str(codes.UNKNOWN_KEY) == "H0102"
    assert str(codes.ARTIFACT_WRITTEN) == "H0601"


def test_builder_chain():
    diag = Diagnostic.warning(codes.NEGATIVE_MARGIN, "I1 exceeds its bound").note("k=2").note("x")
    assert diag.level is Level.WARNING
    assert diag.notes == ["k=2", "x"]
    assert not diag.is_error
    assert str(diag) == "warning[H0401]: I1 exceeds its bound"


def test_report_fails_only_on_errors():
    report = DiagnosticReport()
    assert report.max_level is None
    report.add(Diagnostic.info(codes.ARTIFACT_WRITTEN, "1 artifact"))
    report.add(Diagnostic.warning(codes.DISCREPANCY_UNREACHABLE, "target too small"))
    report.add(None)
    assert not report.failed
    assert report.max_level is Level.WARNING
    report.add(Diagnostic.error(codes.CROSS_CHECK_FAILED, "Parseval off"))
    assert report.failed
    assert report.codes() == ["H0601", "H0501", "H0303"]


def test_error_exit_statuses():
    assert ConfigError("x").exit_status == EXIT_CONFIG
    assert RangeError("x").exit_status == EXIT_CONFIG
    assert AccuracyError("x").exit_status == EXIT_ACCURACY
    assert ConditioningError("x").exit_status == EXIT_ACCURACY
    assert GeometryError("x").exit_status == EXIT_GEOMETRY


def test_error_to_diagnostic_keeps_code_and_notes():
    exc = ConfigError("bad key", code=codes.UNKNOWN_KEY, notes=["allowed: K"])
    diag = exc.to_diagnostic()
    assert diag.level is Level.ERROR
    assert diag.code == codes.UNKNOWN_KEY
    assert diag.notes == ["allowed: K"]
    assert ConditioningError("x").code == codes.ILL_CONDITIONED_BASIS


def test_config_error_is_value_error():
    assert isinstance(ConfigError("x"), ValueError)


def test_render_json():
    report = DiagnosticReport(
        [Diagnostic.error(codes.TAIL_TOO_LARGE, "tail").note("raise T")], ["out/a.csv"]
    )
    data = render_json(report)
    assert data["status"] == "error"
    assert data["artifacts"] == ["out/a.csv"]
    assert data["diagnostics"] == [
        {"level": "error", "code": "H0302", "message": "tail", "notes": ["raise T"]}
    ]


def test_render_text():
    report = DiagnosticReport(
        [Diagnostic.warning(codes.NEGATIVE_MARGIN, "margin -1").note("k=3")], ["b.csv"]
    )
    assert render_text(report).splitlines() == [
        "warning[H0401]: margin -1",
        "  = note: k=3",
        "wrote b.csv",
    ]
