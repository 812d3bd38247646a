"""Exit statuses and error JSON for failing runs."""

import json

from click.testing import CliRunner

from helmstab.cli import main


def _error(result) -> dict:
    data = json.loads(result.output)
    assert data["status"] == "error"
    return data["diagnostics"][0]


def test_missing_config_file(tmp_path) -> None:
    result = CliRunner().invoke(main, ["forward", "--config", str(tmp_path / "nope.toml")])
    assert result.exit_code == 2
    assert "does not exist" in _error(result)["message"]


def test_invalid_value_exits_2(make_config, tmp_path) -> None:
    config = make_config(noise={"level": -1.0})
    result = CliRunner().invoke(main, ["forward", "--config", str(config), "--out", str(tmp_path)])
    assert result.exit_code == 2
    assert _error(result)["code"] == "H0101"


def test_unknown_key_names_the_dotted_key(make_config, tmp_path) -> None:
    config = make_config(grid={"Kmax": 3.0})
    result = CliRunner().invoke(main, ["forward", "--config", str(config), "--out", str(tmp_path)])
    assert result.exit_code == 2
    diag = _error(result)
    assert diag["code"] == "H0102"
    assert "grid.Kmax" in diag["message"]


def test_unsupported_suffix(tmp_path) -> None:
    path = tmp_path / "run.yaml"
    path.write_text("scene: {}\n")
    result = CliRunner().invoke(main, ["bounds", "--config", str(path)])
    assert result.exit_code == 2
    assert _error(result)["notes"] == ["use .toml or .json"]


def test_support_touching_boundary_exits_4(make_config, tmp_path) -> None:
    config = make_config(scene={"f0": [{"center": [0.9, 0.0], "radius": 0.3}]})
    result = CliRunner().invoke(main, ["forward", "--config", str(config), "--out", str(tmp_path)])
    assert result.exit_code == 4
    assert _error(result)["code"] == "H0201"


def test_errors_are_json_even_in_text_mode(make_config, tmp_path) -> None:
    config = make_config(noise={"level": -1.0})
    result = CliRunner().invoke(
        main, ["forward", "--config", str(config), "--out", str(tmp_path), "--format", "text"]
    )
    assert result.exit_code == 2
    assert json.loads(result.output)["command"] == "forward"


def test_failed_run_is_logged(make_config, tmp_path) -> None:
    config = make_config(noise={"level": -1.0})
    CliRunner().invoke(main, ["forward", "--config", str(config), "--out", str(tmp_path)])
    logs = list((tmp_path / "logs").rglob("*.jsonl"))
    assert len(logs) == 1
    entry = json.loads(logs[0].read_text().splitlines()[-1])
    assert entry["command"] == "forward"
    assert entry["exit_status"] == 2


def test_version() -> None:
    result = CliRunner().invoke(main, ["--version"])
    assert result.exit_code == 0
    assert "0.1.0" in result.output
