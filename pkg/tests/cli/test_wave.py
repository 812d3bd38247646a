"""Test the wave-check CLI command end-to-end."""

import json

from click.testing import CliRunner

from helmstab.cli import main


def test_wave_check_writes_tables(make_config, tmp_path) -> None:
    out = tmp_path / "w"
    config = make_config(wave={"link_tolerance": 1e300})
    result = CliRunner().invoke(main, ["wave-check", "--config", str(config), "--out", str(out)])
    assert result.exit_code == 0, result.output
    assert (out / "fourier_link.csv").exists()
    assert (out / "traces.csv").exists()
    assert not (out / "parseval.csv").exists()
    assert json.loads(result.output)["summary"]["max_link_error"] >= 0.0


def test_failed_cross_check_exits_3_with_artifacts(make_config, tmp_path) -> None:
    out = tmp_path / "w"
    config = make_config(wave={"link_tolerance": 1e-300})
    result = CliRunner().invoke(main, ["wave-check", "--config", str(config), "--out", str(out)])
    assert result.exit_code == 3
    data = json.loads(result.output)
    assert data["status"] == "error"
    assert "H0303" in [d["code"] for d in data["diagnostics"]]
    assert (out / "fourier_link.csv").exists()
    assert (out / "manifest.json").exists()


def test_node_out_of_range(make_config, tmp_path) -> None:
    config = make_config(wave={"nodes": [32]})
    result = CliRunner().invoke(
        main, ["wave-check", "--config", str(config), "--out", str(tmp_path)]
    )
    assert result.exit_code == 2
    assert "out of range" in json.loads(result.output)["diagnostics"][0]["message"]
