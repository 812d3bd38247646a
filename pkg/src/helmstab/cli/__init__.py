"""CLI entry point. Both `helmstab` and `hstab` resolve here."""

from __future__ import annotations

import logging
import sys

import click

from helmstab.cli.bounds import bounds
from helmstab.cli.experiment import sweep_experiment
from helmstab.cli.forward import forward
from helmstab.cli.reconstruct import reconstruct_command
from helmstab.cli.wave import wave_check


@click.group()
@click.version_option(package_name="helmstab")
@click.option("-v", "--verbose", is_flag=True, help="Log progress to stderr.")
def main(verbose: bool) -> None:
    """helmstab: increasing stability for the 2D Helmholtz inverse source problem."""
    if verbose:
        logging.basicConfig(
            level=logging.INFO,
            stream=sys.stderr,
            format="%(asctime)s %(name)s %(levelname)s %(message)s",
        )


main.add_command(bounds)
main.add_command(forward)
main.add_command(reconstruct_command)
main.add_command(sweep_experiment)
main.add_command(wave_check)
