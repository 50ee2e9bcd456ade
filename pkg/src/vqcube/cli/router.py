"""
The `vqcube` command group: global options and command registration.
"""

from pathlib import Path

import click

from vqcube.cli import analysis
from vqcube.cli import graphs
from vqcube.cli import symmetry
from vqcube.cli.utils import fail_usage
from vqcube.config import Settings
from vqcube.core.logging import log_manager
from vqcube.logging_setup import _setup_logging


@click.group()
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="TOML file with settings (size_cap, exhaustive_cap, ...).",
)
@click.option("--seed", type=int, help="Seed for sampled verification.")
@click.option("--cap", type=int, help="Size cap for graph materialization.")
@click.option("--log-level", help="Log level for stderr (default WARNING).")
@click.pass_context
def cli(
    ctx: click.Context,
    config_path: Path | None,
    seed: int | None,
    cap: int | None,
    log_level: str | None,
) -> None:
    """Varietal hypercube toolkit: builders, automorphisms and analyses."""
    try:
        cfg = Settings.layered(
            config_path, SIZE_CAP=cap, SEED=seed, LOG_LEVEL=log_level
        )
        _setup_logging(cfg)
    except (ValueError, OSError) as e:
        fail_usage(str(e))
    log_manager.log_debug(
        "config_loaded",
        summary=cfg.model_dump(include={"SIZE_CAP", "EXHAUSTIVE_CAP", "SEED"}),
    )
    ctx.obj = cfg


cli.add_command(graphs.generate)
cli.add_command(graphs.neighbors)
cli.add_command(graphs.adjacent)
cli.add_command(symmetry.transport)
cli.add_command(symmetry.verify)
cli.add_command(analysis.metrics)
cli.add_command(analysis.refute_edge_transitivity)
cli.add_command(analysis.cayley_check)
