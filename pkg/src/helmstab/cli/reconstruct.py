"""The `reconstruct` command: ridge inversion of one band-limited dataset."""

from __future__ import annotations

from pathlib import Path

import click
import numpy as np

from helmstab.artifacts import write_csv, write_json
from helmstab.cli._shared import Outcome, execute, run_options
from helmstab.config import RunConfig
from helmstab.diagnostics import Diagnostic, codes
from helmstab.forward import epsilon_norm, read_dataset, sweep
from helmstab.geometry import Domain, SourcePair
from helmstab.inverse import (
    SourceBasis,
    add_noise,
    assemble,
    coefficient_error,
    error_metrics,
    make_basis,
    reconstruct,
)

COEFF_HEADER = ("index", "channel", "center_x", "center_y", "radius", "value")
FIELD_HEADER = ("x", "y", "f0_rec", "f1_rec", "f0_true", "f1_true")


def _coefficient_rows(basis: SourceBasis, coefficients: np.ndarray):
    for j, ((channel, bump), value) in enumerate(zip(basis.columns(), coefficients, strict=True)):
        yield (j, f"f{channel}", bump.center[0], bump.center[1], bump.radius, float(value))


def _field_rows(domain: Domain, rec: SourcePair, truth: SourcePair, n: int):
    """Both pairs on an n x n lattice over the domain's bounding box, inside points only."""
    lo, hi = domain.nodes.min(axis=0), domain.nodes.max(axis=0)
    gx, gy = np.meshgrid(np.linspace(lo[0], hi[0], n), np.linspace(lo[1], hi[1], n))
    pts = np.stack([gx.ravel(), gy.ravel()], axis=1)
    pts = pts[domain.contains(pts)]
    x, y = pts[:, 0], pts[:, 1]
    columns = [rec.f0(x, y), rec.f1(x, y), truth.f0(x, y), truth.f1(x, y)]
    for i in range(len(pts)):
        yield (float(x[i]), float(y[i]), *(float(c[i]) for c in columns))


def _reconstruct(
    cfg: RunConfig, out: Path, threads: int | None, data_path: Path | None
) -> Outcome:
    domain, source = cfg.scene.domain, cfg.scene.source
    outcome = Outcome()
    basis = make_basis(domain, cfg.basis, source.density)
    truth, expected = source, None
    if cfg.experiment.inverse_crime:
        truth, expected = basis.snap(source)

    if data_path is not None:
        data = read_dataset(data_path, domain)
        if data.scene_hash and data.scene_hash != cfg.scene.hash:
            outcome.diagnostics.append(
                Diagnostic.warning(
                    codes.GRID_MISMATCH,
                    f"{data_path.name} was generated from a different scene",
                ).note("error metrics compare against the configured scene")
            )
    else:
        grid = cfg.grid.frequency_grid()
        clean = sweep(
            domain, truth, grid, method=cfg.method, threads=threads, scene_hash=cfg.scene.hash
        )
        data = add_noise(clean, cfg.noise.level, cfg.noise.seed)

    matrix = assemble(domain, basis, data.grid, method=cfg.method, threads=threads)
    result = reconstruct(matrix, data, cfg.experiment.regularization)
    outcome.diagnostics.extend(result.diagnostics)
    err0, err1 = error_metrics(result.fields, truth)
    eps2, E = epsilon_norm(data)

    summary = {
        "K": data.grid.K,
        "epsilon": float(np.sqrt(eps2)),
        "E": E,
        "err_f0_H1": err0,
        "err_f1_L2": err1,
        "alpha": result.alpha,
        "status": result.status.value,
        "basis_size": basis.size,
    }
    if expected is not None:
        summary["coefficient_error"] = coefficient_error(result.coefficients, expected)
    outcome.summary = summary

    outcome.artifacts += [
        write_json(out / "reconstruction.json", {**result.to_dict(), **summary}),
        write_csv(
            out / "coefficients.csv", COEFF_HEADER, _coefficient_rows(basis, result.coefficients)
        ),
        write_csv(
            out / "fields.csv",
            FIELD_HEADER,
            _field_rows(domain, result.fields, truth, cfg.output.field_points),
        ),
    ]
    return outcome


@click.command("reconstruct")
@run_options
@click.option(
    "--data",
    "data_path",
    type=click.Path(path_type=Path, dir_okay=False),
    default=None,
    help="Reconstruct from a dataset written by `forward` instead of sweeping.",
)
@click.option("--inverse-crime", is_flag=True, help="Snap the truth onto the basis.")
def reconstruct_command(
    config_path: Path,
    out: Path | None,
    seed: int | None,
    threads: int | None,
    output_format: str,
    data_path: Path | None,
    inverse_crime: bool,
) -> None:
    """Recover the source pair from band-limited noisy data by ridge regression."""

    def body(cfg: RunConfig, out_dir: Path, n_threads: int | None) -> Outcome:
        return _reconstruct(cfg, out_dir, n_threads, data_path)

    execute(
        "reconstruct", body, config_path,
        out=out, seed=seed, threads=threads, output_format=output_format,
        inverse_crime=inverse_crime or None,
    )
