"""Run configuration: TOML or JSON files, or the manifest of an earlier run.

Every section is validated into a frozen dataclass. Unknown keys are
rejected at every level with the dotted key in the message.
"""

from __future__ import annotations

import copy
import hashlib
import json
import tomllib
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from helmstab.diagnostics import codes
from helmstab.errors import ConfigError
from helmstab.forward import FrequencyGrid, KernelMethod
from helmstab.geometry import Domain, PolarDensity, SourcePair, make_bump, make_disk, make_polygon
from helmstab.inverse import SMOOTH_BASIS, BasisSpec, ExperimentConfig, Regularization
from helmstab.wavedom import WaveEvalConfig

_SECTIONS = {
    "scene": {"domain", "f0", "f1", "density"},
    "grid": {"K", "points_per_unit", "panel_order"},
    "noise": {"level", "seed"},
    "basis": {"count", "radius", "extent", "offset"},
    "forward": {"method"},
    "wave": {
        "t_max", "dt", "n_phi", "n_theta", "n_theta_inside", "nodes", "ks", "omega_max",
        "parseval", "trace_end", "trace_step", "link_tolerance", "parseval_tolerance",
    },
    "bounds": {"real_ks", "sector_ks", "tail_ks", "window_ks", "continuation_ks", "hankel_points"},
    "experiment": {"Ks", "regularization", "alpha", "tau", "inverse_crime"},
    "output": {"directory", "field_points"},
}
_DOMAIN_KEYS = {"kind", "radius", "nodes", "vertices", "nodes_per_edge"}
_BUMP_KEYS = {"center", "radius", "amplitude"}
_DENSITY_KEYS = {"n_radial", "n_angular"}


def _check_keys(raw: Any, allowed: set[str], where: str) -> dict:
    if not isinstance(raw, dict):
        raise ConfigError(f"'{where}' must be a table, got {type(raw).__name__}")
    unknown = sorted(set(raw) - allowed)
    if unknown:
        raise ConfigError(
            f"unknown key '{where}.{unknown[0]}'" if where else f"unknown section '{unknown[0]}'",
            code=codes.UNKNOWN_KEY,
            notes=[f"allowed: {', '.join(sorted(allowed))}"],
        )
    return raw


def _number(raw: dict, key: str, default, where: str, cast=float):
    value = raw.get(key, default)
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, int | float):
        raise ConfigError(f"'{where}.{key}' must be a number, got {value!r}")
    if cast is int and float(value) != int(value):
        raise ConfigError(f"'{where}.{key}' must be an integer, got {value!r}")
    return cast(value)


def _numbers(raw: dict, key: str, default, where: str) -> tuple[float, ...]:
    values = raw.get(key, default)
    if not isinstance(values, list | tuple):
        raise ConfigError(f"'{where}.{key}' must be a list of numbers")
    return tuple(_number({key: v}, key, None, where) for v in values)


def _pairs(raw: dict, key: str, default, where: str) -> tuple[complex, ...]:
    out = []
    for item in raw.get(key, default):
        if not (isinstance(item, list | tuple) and len(item) == 2):
            raise ConfigError(f"'{where}.{key}' entries must be [re, im] pairs, got {item!r}")
        re, im = _numbers({key: item}, key, None, where)
        out.append(complex(re, im))
    return tuple(out)


def _flag(raw: dict, key: str, default: bool, where: str) -> bool:
    value = raw.get(key, default)
    if not isinstance(value, bool):
        raise ConfigError(f"'{where}.{key}' must be true or false, got {value!r}")
    return value


# ---------------------------------------------------------------------------
# Sections
# ---------------------------------------------------------------------------


def _domain(raw: dict) -> Domain:
    raw = _check_keys(raw, _DOMAIN_KEYS, "scene.domain")
    kind = raw.get("kind", "disk")
    if kind == "disk":
        return make_disk(
            _number(raw, "radius", 1.0, "scene.domain"),
            _number(raw, "nodes", 128, "scene.domain", int),
        )
    if kind == "polygon":
        if "vertices" not in raw:
            raise ConfigError("'scene.domain.vertices' is required for a polygon")
        return make_polygon(
            raw["vertices"], _number(raw, "nodes_per_edge", 32, "scene.domain", int)
        )
    raise ConfigError(f"unknown domain kind {kind!r}", notes=["use 'disk' or 'polygon'"])


def _bumps(raw: Any, where: str) -> list:
    if not isinstance(raw, list):
        raise ConfigError(f"'{where}' must be a list of bumps")
    bumps = []
    for i, entry in enumerate(raw):
        entry = _check_keys(entry, _BUMP_KEYS, f"{where}[{i}]")
        center = entry.get("center")
        if not (isinstance(center, list | tuple) and len(center) == 2):
            raise ConfigError(f"'{where}[{i}].center' must be an [x, y] pair")
        if "radius" not in entry:
            raise ConfigError(f"'{where}[{i}].radius' is required")
        cx, cy = _numbers(entry, "center", None, f"{where}[{i}]")
        bumps.append(
            make_bump(
                (cx, cy),
                _number(entry, "radius", None, f"{where}[{i}]"),
                _number(entry, "amplitude", 1.0, f"{where}[{i}]"),
            )
        )
    return bumps


@dataclass(frozen=True)
class Scene:
    domain: Domain
    source: SourcePair
    hash: str


def _scene(raw: dict) -> Scene:
    raw = _check_keys(raw, _SECTIONS["scene"], "scene")
    domain = _domain(raw.get("domain", {}))
    dens = _check_keys(raw.get("density", {}), _DENSITY_KEYS, "scene.density")
    density = PolarDensity(
        _number(dens, "n_radial", PolarDensity().n_radial, "scene.density", int),
        _number(dens, "n_angular", PolarDensity().n_angular, "scene.density", int),
    )
    source = SourcePair.from_bumps(
        domain,
        _bumps(raw.get("f0", []), "scene.f0"),
        _bumps(raw.get("f1", []), "scene.f1"),
        density,
    )
    return Scene(domain, source, canonical_hash(raw)[:16])


@dataclass(frozen=True)
class GridConfig:
    K: float = 8.0
    points_per_unit: int = 8
    panel_order: int = 8

    def frequency_grid(self, K: float | None = None) -> FrequencyGrid:
        return FrequencyGrid(
            self.K if K is None else K,
            points_per_unit=self.points_per_unit,
            panel_order=self.panel_order,
        )


@dataclass(frozen=True)
class NoiseConfig:
    level: float = 0.0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.level < 0:
            raise ConfigError(f"'noise.level' must be nonnegative, got {self.level}")


@dataclass(frozen=True)
class WaveConfig:
    eval: WaveEvalConfig
    nodes: tuple[int, ...] = (0, 16, 32, 48, 64, 80, 96, 112)
    ks: tuple[float, ...] = (1.0, 2.0, 5.0, 8.0)
    omega_max: float | None = None
    parseval: bool = True
    trace_end: float = 6.0
    trace_step: float = 0.05
    link_tolerance: float = 1e-3
    parseval_tolerance: float = 5e-2


@dataclass(frozen=True)
class BoundsConfig:
    real_ks: tuple[float, ...] = (1.0, 2.0, 4.0, 8.0)
    sector_ks: tuple[complex, ...] = (1 + 0.5j, 2 + 1j, 4 + 2j, 8 + 4j)
    tail_ks: tuple[float, ...] = (16.0, 32.0, 64.0)
    window_ks: tuple[float, ...] = ()
    continuation_ks: tuple[float, ...] = ()
    hankel_points: tuple[complex, ...] = (1 + 0j, 2 + 1j, 5 + 5j, 10 - 3j, 40 + 0.5j)


@dataclass(frozen=True)
class OutputConfig:
    directory: Path = Path("out")
    field_points: int = 41


@dataclass(frozen=True)
class RunConfig:
    scene: Scene
    grid: GridConfig
    noise: NoiseConfig
    basis: BasisSpec
    method: KernelMethod
    wave: WaveConfig
    bounds: BoundsConfig
    experiment: ExperimentConfig
    output: OutputConfig
    raw: dict

    @property
    def hash(self) -> str:
        return canonical_hash(self.raw)

    def with_overrides(
        self,
        *,
        seed: int | None = None,
        out: Path | None = None,
        inverse_crime: bool | None = None,
    ) -> RunConfig:
        """Apply CLI flags. The echoed config carries the overridden values."""
        raw = copy.deepcopy(self.raw)
        if seed is not None:
            raw.setdefault("noise", {})["seed"] = int(seed)
        if out is not None:
            raw.setdefault("output", {})["directory"] = str(out)
        if inverse_crime is not None:
            raw.setdefault("experiment", {})["inverse_crime"] = bool(inverse_crime)
        return parse_config(raw)


def _wave(raw: dict) -> WaveConfig:
    w = "wave"
    defaults = WaveConfig(WaveEvalConfig())
    evaluation = WaveEvalConfig(
        t_max=_number(raw, "t_max", None, w),
        dt=_number(raw, "dt", 0.02, w),
        n_phi=_number(raw, "n_phi", 24, w, int),
        n_theta=_number(raw, "n_theta", 32, w, int),
        n_theta_inside=_number(raw, "n_theta_inside", 128, w, int),
    )
    nodes = tuple(int(n) for n in _numbers(raw, "nodes", defaults.nodes, w))
    return WaveConfig(
        eval=evaluation,
        nodes=nodes,
        ks=_numbers(raw, "ks", defaults.ks, w),
        omega_max=_number(raw, "omega_max", defaults.omega_max, w),
        parseval=_flag(raw, "parseval", True, w),
        trace_end=_number(raw, "trace_end", defaults.trace_end, w),
        trace_step=_number(raw, "trace_step", defaults.trace_step, w),
        link_tolerance=_number(raw, "link_tolerance", defaults.link_tolerance, w),
        parseval_tolerance=_number(raw, "parseval_tolerance", defaults.parseval_tolerance, w),
    )


def _bounds(raw: dict) -> BoundsConfig:
    b, d = "bounds", BoundsConfig()
    return BoundsConfig(
        real_ks=_numbers(raw, "real_ks", d.real_ks, b),
        sector_ks=_pairs(raw, "sector_ks", [[k.real, k.imag] for k in d.sector_ks], b),
        tail_ks=_numbers(raw, "tail_ks", d.tail_ks, b),
        window_ks=_numbers(raw, "window_ks", d.window_ks, b),
        continuation_ks=_numbers(raw, "continuation_ks", d.continuation_ks, b),
        hankel_points=_pairs(
            raw, "hankel_points", [[z.real, z.imag] for z in d.hankel_points], b
        ),
    )


def parse_config(raw: dict) -> RunConfig:
    raw = _check_keys(raw, set(_SECTIONS), "")
    sec = {name: _check_keys(raw.get(name, {}), keys, name) for name, keys in _SECTIONS.items()}
    if "domain" not in sec["scene"]:
        raise ConfigError("'scene.domain' is required")

    grid = GridConfig(
        K=_number(sec["grid"], "K", 8.0, "grid"),
        points_per_unit=_number(sec["grid"], "points_per_unit", 8, "grid", int),
        panel_order=_number(sec["grid"], "panel_order", 8, "grid", int),
    )
    grid.frequency_grid()
    noise = NoiseConfig(
        level=_number(sec["noise"], "level", 0.0, "noise"),
        seed=_number(sec["noise"], "seed", 0, "noise", int),
    )
    basis = BasisSpec(
        count=_number(sec["basis"], "count", SMOOTH_BASIS.count, "basis", int),
        radius=_number(sec["basis"], "radius", SMOOTH_BASIS.radius, "basis"),
        extent=_number(sec["basis"], "extent", SMOOTH_BASIS.extent, "basis"),
        offset=_number(sec["basis"], "offset", 0.0, "basis"),
    )
    method = KernelMethod.parse(sec["forward"].get("method", "addition"))

    exp = sec["experiment"]
    mode = exp.get("regularization", "discrepancy")
    regularization = Regularization(
        mode,
        alpha=_number(exp, "alpha", 1e-8, "experiment"),
        tau=_number(exp, "tau", 1.0, "experiment"),
    )
    experiment = ExperimentConfig(
        Ks=_numbers(exp, "Ks", [2.0, 4.0, 8.0, 16.0, 32.0], "experiment"),
        noise_level=noise.level,
        seed=noise.seed,
        regularization=regularization,
        basis=basis,
        inverse_crime=_flag(exp, "inverse_crime", False, "experiment"),
        points_per_unit=grid.points_per_unit,
        panel_order=grid.panel_order,
        method=method,
    )
    output = OutputConfig(
        directory=Path(str(sec["output"].get("directory", "out"))),
        field_points=_number(sec["output"], "field_points", 41, "output", int),
    )
    return RunConfig(
        scene=_scene(sec["scene"]),
        grid=grid,
        noise=noise,
        basis=basis,
        method=method,
        wave=_wave(sec["wave"]),
        bounds=_bounds(sec["bounds"]),
        experiment=experiment,
        output=output,
        raw=copy.deepcopy(raw),
    )


# ---------------------------------------------------------------------------
# Files
# ---------------------------------------------------------------------------


def canonical_hash(raw: dict) -> str:
    text = json.dumps(raw, sort_keys=True, separators=(",", ":"), default=str)
    return hashlib.sha256(text.encode()).hexdigest()


def read_raw(path: Path) -> dict:
    """Parse a config file. A run manifest yields the config it echoes."""
    if not path.exists():
        raise ConfigError(f"config file {path} does not exist")
    text = path.read_text()
    try:
        if path.suffix == ".toml":
            raw = tomllib.loads(text)
        elif path.suffix == ".json":
            raw = json.loads(text)
        else:
            raise ConfigError(
                f"unsupported config format {path.suffix!r}", notes=["use .toml or .json"]
            )
    except (tomllib.TOMLDecodeError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot parse {path.name}: {exc}") from exc
    if isinstance(raw, dict) and "manifest_version" in raw:
        if "config" not in raw:
            raise ConfigError(f"manifest {path.name} has no config section")
        raw = raw["config"]
    return raw


def load_config(path: Path) -> RunConfig:
    return parse_config(read_raw(path))
