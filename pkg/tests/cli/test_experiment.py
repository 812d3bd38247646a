"""Test the sweep-experiment CLI command end-to-end."""

import csv
import json

from click.testing import CliRunner

from helmstab.cli import main


def test_sweep_experiment_small(make_config, tmp_path) -> None:
    out = tmp_path / "e"
    result = CliRunner().invoke(
        main, ["sweep-experiment", "--config", str(make_config()), "--out", str(out)]
    )
    assert result.exit_code == 0, result.output
    summary = json.loads(result.output)["summary"]
    assert summary["Ks"] == [2.0, 3.0]
    assert summary["M"] > 0
    with (out / "stability.csv").open() as fh:
        rows = list(csv.DictReader(fh))
    assert [float(r["K"]) for r in rows] == [2.0, 3.0]
    assert {"epsilon", "E", "err_f0_H1", "err_f1_L2", "rhs_theorem", "alpha"} <= set(rows[0])
    assert (out / "stability_summary.json").exists()


def test_sweep_experiment_rejects_duplicate_ks(make_config, tmp_path) -> None:
    config = make_config(experiment={"Ks": [2.0, 2.0]})
    result = CliRunner().invoke(
        main, ["sweep-experiment", "--config", str(config), "--out", str(tmp_path)]
    )
    assert result.exit_code == 2
