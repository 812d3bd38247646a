"""Test the bounds CLI command end-to-end."""

import csv
import json

from click.testing import CliRunner

from helmstab.cli import main


def _rows(path):
    with path.open() as fh:
        return list(csv.DictReader(fh))


def test_bounds_margins_nonnegative(make_config, tmp_path) -> None:
    out = tmp_path / "b"
    result = CliRunner().invoke(main, ["bounds", "--config", str(make_config()), "--out", str(out)])
    assert result.exit_code == 0, result.output
    data = json.loads(result.output)
    assert data["summary"]["min_margin"] >= 0
    rows = _rows(out / "bounds.csv")
    assert {r["functional"] for r in rows} >= {"I1", "I2"}
    assert all(float(r["margin"]) >= 0 for r in rows)
    hankel = _rows(out / "hankel_bounds.csv")
    assert len(hankel) == 2
    assert all(float(r["weber_margin"]) >= 0 for r in hankel)


def test_bounds_data_window_rows(make_config, tmp_path) -> None:
    config = make_config(bounds={"window_ks": [0.5, 1.0, 2.0]})
    out = tmp_path / "w"
    result = CliRunner().invoke(main, ["bounds", "--config", str(config), "--out", str(out)])
    assert result.exit_code == 0, result.output
    assert json.loads(result.output)["summary"]["epsilon"] > 0
    assert len(_rows(out / "bounds.csv")) > 2


def test_window_outside_band_is_config_error(make_config, tmp_path) -> None:
    config = make_config(bounds={"window_ks": [5.0]})
    result = CliRunner().invoke(main, ["bounds", "--config", str(config), "--out", str(tmp_path)])
    assert result.exit_code == 2
