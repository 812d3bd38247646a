"""Test the reconstruct CLI command end-to-end."""

import csv
import json

import pytest
from click.testing import CliRunner

from helmstab.cli import main


def _run(args) -> dict:
    result = CliRunner().invoke(main, args)
    assert result.exit_code == 0, result.output
    return json.loads(result.output)


def test_reconstruct_writes_fields_and_coefficients(make_config, tmp_path) -> None:
    out = tmp_path / "r"
    data = _run(["reconstruct", "--config", str(make_config()), "--out", str(out)])
    summary = data["summary"]
    assert summary["basis_size"] == 18
    assert summary["status"] == "fixed"
    assert summary["err_f0_H1"] >= 0
    assert "coefficient_error" not in summary
    with (out / "coefficients.csv").open() as fh:
        assert len(list(csv.DictReader(fh))) == 18
    with (out / "fields.csv").open() as fh:
        rows = list(csv.DictReader(fh))
    assert rows
    assert all(float(r["x"]) ** 2 + float(r["y"]) ** 2 < 1.0 for r in rows)


def test_reconstruct_from_forward_data_matches_inline(make_config, tmp_path) -> None:
    config = str(make_config())
    _run(["forward", "--config", config, "--out", str(tmp_path / "fwd")])
    from_file = _run(
        ["reconstruct", "--config", config, "--out", str(tmp_path / "a"),
         "--data", str(tmp_path / "fwd" / "cauchy_data.csv")]
    )["summary"]
    inline = _run(["reconstruct", "--config", config, "--out", str(tmp_path / "b")])["summary"]
    for key in ("epsilon", "err_f0_H1", "err_f1_L2"):
        assert from_file[key] == pytest.approx(inline[key], rel=1e-10)


def test_data_from_other_scene_warns(make_config, tmp_path) -> None:
    other = make_config("other.json", scene={"f1": []})
    _run(["forward", "--config", str(other), "--out", str(tmp_path / "fwd")])
    data = _run(
        ["reconstruct", "--config", str(make_config()), "--out", str(tmp_path / "r"),
         "--data", str(tmp_path / "fwd" / "cauchy_data.csv")]
    )
    assert "H0106" in [d["code"] for d in data["diagnostics"]]


def test_data_with_wrong_node_count(make_config, tmp_path) -> None:
    other = make_config("other.json", scene={"domain": {"kind": "disk", "nodes": 48}})
    _run(["forward", "--config", str(other), "--out", str(tmp_path / "fwd")])
    result = CliRunner().invoke(
        main,
        ["reconstruct", "--config", str(make_config()), "--out", str(tmp_path / "r"),
         "--data", str(tmp_path / "fwd" / "cauchy_data.csv")],
    )
    assert result.exit_code == 2
    assert json.loads(result.output)["diagnostics"][0]["code"] == "H0106"


def test_inverse_crime_flag_reports_coefficient_error(make_config, tmp_path) -> None:
    out = tmp_path / "c"
    data = _run(
        ["reconstruct", "--config", str(make_config()), "--out", str(out), "--inverse-crime"]
    )
    assert "coefficient_error" in data["summary"]
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["config"]["experiment"]["inverse_crime"] is True


def test_discrepancy_on_clean_data_is_unreachable(make_config, tmp_path) -> None:
    config = make_config(noise={"level": 0.0}, experiment={"regularization": "discrepancy"})
    data = _run(["reconstruct", "--config", str(config), "--out", str(tmp_path / "r")])
    assert data["summary"]["status"] == "unreachable"
    assert "H0501" in [d["code"] for d in data["diagnostics"]]
