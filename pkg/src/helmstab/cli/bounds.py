"""The `bounds` command: certify the explicit bounds on the configured scene."""

from __future__ import annotations

from pathlib import Path

import click
import numpy as np

from helmstab.artifacts import write_csv
from helmstab.cli._shared import Outcome, execute, run_options
from helmstab.config import RunConfig
from helmstab.diagnostics import Diagnostic, codes
from helmstab.forward import epsilon_norm, sweep
from helmstab.functionals import (
    BoundReport,
    certify_functionals,
    data_window_check,
    fit_continuation_constant,
    fit_tail_constant,
)
from helmstab.geometry import SobolevBudget
from helmstab.specfun import certify_bounds

BOUND_HEADER = ("functional", "k_re", "k_im", "computed", "bound", "margin")
HANKEL_HEADER = (
    "re_z", "im_z", "abs_h0", "weber_rhs", "simple_rhs", "weber_margin", "simple_margin",
)


def _bounds(cfg: RunConfig, out: Path, threads: int | None) -> Outcome:
    domain, source, b = cfg.scene.domain, cfg.scene.source, cfg.bounds
    outcome = Outcome()
    ks = [complex(k) for k in b.real_ks] + list(b.sector_ks)
    reports: list[BoundReport] = certify_functionals(domain, source, ks)

    if b.tail_ks:
        c_tail, tail = fit_tail_constant(domain, source, b.tail_ks, threads=threads)
        reports += tail
        outcome.summary["c_tail"] = c_tail

    if b.window_ks or b.continuation_ks:
        K = cfg.grid.K
        data = sweep(domain, source, cfg.grid.frequency_grid(), method=cfg.method, threads=threads)
        eps2, _ = epsilon_norm(data)
        eps = float(np.sqrt(eps2))
        outcome.summary["epsilon"] = eps
        if b.window_ks:
            reports += data_window_check(domain, source, K, eps2, b.window_ks)
        if b.continuation_ks and 0 < eps < 1:
            M = SobolevBudget.of(source).M
            fitted, cont = fit_continuation_constant(domain, source, K, b.continuation_ks, eps, M)
            reports += cont
            outcome.summary["continuation_constant"] = fitted
        elif b.continuation_ks:
            outcome.diagnostics.append(
                Diagnostic.warning(
                    codes.DATA_NORM_NOT_SMALL,
                    f"data norm {eps:.3e} outside (0, 1); continuation rows skipped",
                )
            )

    outcome.artifacts.append(
        write_csv(
            out / "bounds.csv",
            BOUND_HEADER,
            ([r.to_row()[key] for key in BOUND_HEADER] for r in reports),
        )
    )
    for r in reports:
        outcome.diagnostics.extend(r.diagnostics())

    hankel = [certify_bounds(z) for z in b.hankel_points]
    outcome.artifacts.append(
        write_csv(
            out / "hankel_bounds.csv",
            HANKEL_HEADER,
            (
                (h.z.real, h.z.imag, h.abs_h0, h.weber_rhs, h.simple_rhs,
                 h.weber_margin, h.simple_margin)
                for h in hankel
            ),
        )
    )
    for h in hankel:
        outcome.diagnostics.extend(h.diagnostics())

    outcome.summary["rows"] = len(reports)
    outcome.summary["min_margin"] = min((r.margin for r in reports), default=0.0)
    return outcome


@click.command()
@run_options
def bounds(
    config_path: Path, out: Path | None, seed: int | None, threads: int | None, output_format: str
) -> None:
    """Evaluate I1/I2 against their bounds, fit the tail constant, check the Hankel bounds."""
    execute(
        "bounds", _bounds, config_path,
        out=out, seed=seed, threads=threads, output_format=output_format,
    )
