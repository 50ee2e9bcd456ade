"""
Commands for building graphs and querying the label oracles.
"""

from pathlib import Path

import click

from vqcube.cli.utils import get_settings
from vqcube.cli.utils import handle_errors
from vqcube.cli.utils import parse_label
from vqcube.core.messages import cli_messages
from vqcube.models.graph import Graph
from vqcube.schemas.enums import ExportFormat
from vqcube.services import export_service
from vqcube.services import topology_service


FAMILIES = ("vq", "q", "circulant")


def _parse_connection(text: str) -> set[int]:
    try:
        return {int(part) for part in text.split(",") if part.strip()}
    except ValueError as e:
        raise click.BadParameter(
            f"{text!r} is not a comma-separated list of integers",
            param_hint="--connection",
        ) from e


def build_family(
    family: str, n: int, size_cap: int, connection: str | None = None
) -> Graph:
    if family == "vq":
        return topology_service.build_recursive(n, size_cap=size_cap)
    if family == "q":
        return topology_service.build_hypercube(n, size_cap=size_cap)
    if connection is None:
        raise click.BadParameter(
            "circulant graphs need --connection", param_hint="--connection"
        )
    return topology_service.build_circulant(n, _parse_connection(connection))


@click.command()
@click.argument("family", type=click.Choice(FAMILIES))
@click.argument("n", type=int)
@click.argument(
    "fmt",
    metavar="[FORMAT]",
    required=False,
    type=click.Choice([f.value for f in ExportFormat]),
)
@click.option(
    "--format",
    "format_option",
    type=click.Choice([f.value for f in ExportFormat]),
    help="Output format (same as the positional FORMAT).",
)
@click.option("--connection", help="Circulant connection set, e.g. 1,4,7.")
@click.option("--out", type=click.Path(path_type=Path), help="Write to a file.")
@click.pass_context
@handle_errors
def generate(
    ctx: click.Context,
    family: str,
    n: int,
    fmt: str | None,
    format_option: str | None,
    connection: str | None,
    out: Path | None,
) -> None:
    """Build a graph and print or write it."""
    cfg = get_settings(ctx)
    export_format = ExportFormat(format_option or fmt or ExportFormat.EDGELIST.value)
    graph = build_family(family, n, cfg.SIZE_CAP, connection)
    text = export_service.render_graph(graph, export_format)
    summary = cli_messages.get_message(
        "graph_written",
        family=graph.family.value,
        n=n,
        vertices=graph.vertex_count,
        edges=graph.edge_count,
    )
    if out is None:
        click.echo(text, nl=False)
        click.echo(summary, err=True)
        return
    export_service.write_text(out, text)
    click.echo(summary)
    click.echo(
        cli_messages.get_message(
            "graph_written_to", fmt=export_format.value, path=out
        )
    )


@click.command()
@click.argument("n", type=int)
@click.argument("label")
@handle_errors
def neighbors(n: int, label: str) -> None:
    """List the n neighbours of LABEL, by dimension."""
    x = parse_label(n, label)
    for d, y in enumerate(topology_service.neighbors(x), start=1):
        click.echo(cli_messages.get_message("neighbor_line", dimension=d, label=y))


@click.command()
@click.argument("n", type=int)
@click.argument("first")
@click.argument("second")
@handle_errors
def adjacent(n: int, first: str, second: str) -> None:
    """Classify the pair FIRST SECOND."""
    x = parse_label(n, first, "FIRST")
    y = parse_label(n, second, "SECOND")
    edge_class = topology_service.classify_edge(x, y)
    if edge_class is None:
        click.echo(cli_messages.get_message("adjacent_no"))
        return
    click.echo(
        cli_messages.get_message(
            "adjacent_yes",
            dimension=edge_class.dimension,
            kind=edge_class.kind.value,
        )
    )
