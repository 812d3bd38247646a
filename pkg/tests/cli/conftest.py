"""Small scene configs for end-to-end CLI runs."""

from __future__ import annotations

import copy
import json
from pathlib import Path
from unittest.mock import patch

import pytest

BASE = {
    "scene": {
        "domain": {"kind": "disk", "radius": 1.0, "nodes": 32},
        "f0": [{"center": [0.1, 0.0], "radius": 0.3}],
        "f1": [{"center": [-0.2, 0.1], "radius": 0.25, "amplitude": -0.5}],
        "density": {"n_radial": 8, "n_angular": 12},
    },
    "grid": {"K": 2.0, "points_per_unit": 4, "panel_order": 4},
    "noise": {"level": 0.01, "seed": 3},
    "basis": {"count": 3, "radius": 0.2, "extent": 0.4},
    "bounds": {
        "real_ks": [1.0],
        "sector_ks": [[1.0, 0.5]],
        "tail_ks": [],
        "hankel_points": [[1.0, 0.0], [5.0, 5.0]],
    },
    "wave": {
        "nodes": [0],
        "ks": [1.0],
        "parseval": False,
        "dt": 0.05,
        "n_phi": 8,
        "n_theta": 8,
        "n_theta_inside": 16,
        "trace_end": 1.0,
        "trace_step": 0.5,
    },
    "experiment": {"Ks": [2.0, 3.0], "regularization": "fixed", "alpha": 1e-6},
}


def _merge(base: dict, extra: dict) -> dict:
    out = copy.deepcopy(base)
    for key, value in extra.items():
        if isinstance(value, dict) and isinstance(out.get(key), dict):
            out[key] = _merge(out[key], value)
        else:
            out[key] = value
    return out


@pytest.fixture(autouse=True)
def _isolated_runlog(tmp_path: Path):
    with patch("helmstab.runlog._LOG_ROOT", tmp_path / "logs"):
        yield


@pytest.fixture
def make_config(tmp_path: Path):
    """Write BASE merged with overrides to a JSON config and return its path."""

    def _make(name: str = "run.json", **sections) -> Path:
        path = tmp_path / name
        path.write_text(json.dumps(_merge(BASE, sections)))
        return path

    return _make
