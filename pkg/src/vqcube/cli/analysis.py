"""
Commands for distance metrics, the edge-transitivity witness and the
circulant cross-check.
"""

from pathlib import Path

import click

from vqcube.cli.utils import finish
from vqcube.cli.utils import get_settings
from vqcube.cli.utils import handle_errors
from vqcube.cli.utils import write_report
from vqcube.core.messages import cli_messages
from vqcube.schemas.dto import MetricsReport
from vqcube.schemas.enums import GraphFamily
from vqcube.schemas.enums import MetricsMode
from vqcube.services import analysis_service
from vqcube.services import topology_service


METRIC_MODES = {"single": MetricsMode.SINGLE_SOURCE, "all": MetricsMode.ALL_SOURCES}
CAYLEY_CONNECTION = frozenset({1, 4, 7})


def _echo_metrics(family: GraphFamily, report: MetricsReport) -> None:
    click.echo(
        cli_messages.get_message(
            "metrics_line",
            family=family.value,
            n=report.n,
            diameter=report.diameter,
            average=report.average_distance_decimal,
            num=report.average_distance_num,
            den=report.average_distance_den,
            mode=report.mode.value,
        )
    )
    profile = ", ".join(f"{e}: {c}" for e, c in report.eccentricity_profile.items())
    click.echo(cli_messages.get_message("metrics_profile", profile=profile))


@click.command()
@click.argument("family", type=click.Choice(["vq", "q", "both"]))
@click.argument("n", type=int)
@click.option(
    "--mode",
    type=click.Choice(sorted(METRIC_MODES)),
    help="single: one BFS (vertex-transitive families); all: BFS from every vertex.",
)
@click.option("--out", type=click.Path(path_type=Path), help="Write a JSON report.")
@click.pass_context
@handle_errors
def metrics(
    ctx: click.Context, family: str, n: int, mode: str | None, out: Path | None
) -> None:
    """Diameter and exact average distance of VQ_n and/or Q_n."""
    cfg = get_settings(ctx)
    metrics_mode = METRIC_MODES[mode] if mode is not None else None

    graphs = []
    if family in ("vq", "both"):
        graphs.append(topology_service.build_recursive(n, size_cap=cfg.SIZE_CAP))
    if family in ("q", "both"):
        graphs.append(topology_service.build_hypercube(n, size_cap=cfg.SIZE_CAP))

    reports = {g.family: analysis_service.metrics(g, metrics_mode) for g in graphs}
    passed = True
    for graph_family, report in reports.items():
        _echo_metrics(graph_family, report)
        if not report.eccentricities_uniform:
            passed = False
            click.echo(
                cli_messages.get_message(
                    "metrics_nonuniform", profile=report.eccentricity_profile
                )
            )

    write_report(out, reports if len(reports) > 1 else next(iter(reports.values())))
    finish(passed)


@click.command("refute-edge-transitivity")
@click.argument("n", type=int, default=4)
@click.option("--max-length", type=int, help="Longest cycle length to scan.")
@click.option("--out", type=click.Path(path_type=Path), help="Write a JSON report.")
@click.pass_context
@handle_errors
def refute_edge_transitivity(
    ctx: click.Context, n: int, max_length: int | None, out: Path | None
) -> None:
    """Find two edges of VQ_n told apart by their cycle counts."""
    cfg = get_settings(ctx)
    report = analysis_service.refute_edge_transitivity(
        n, max_length=max_length if max_length is not None else cfg.CYCLE_LENGTH_CAP
    )
    if report.witness is None:
        click.echo(
            cli_messages.get_message(
                "witness_missing", n=n, max_length=report.max_length
            )
        )
    else:
        w = report.witness
        click.echo(
            cli_messages.get_message(
                "witness_found",
                n=n,
                edge_a="-".join(w.edge_a),
                count_a=w.count_a,
                edge_b="-".join(w.edge_b),
                count_b=w.count_b,
                length=w.length,
            )
        )
    write_report(out, report)
    finish(report.found)


@click.command("cayley-check")
@click.option("--out", type=click.Path(path_type=Path), help="Write the mapping.")
@click.pass_context
@handle_errors
def cayley_check(ctx: click.Context, out: Path | None) -> None:
    """Check that VQ_3 is isomorphic to the circulant C(Z_8, {1,4,7})."""
    cfg = get_settings(ctx)
    vq3 = topology_service.build_recursive(3)
    circulant = topology_service.build_circulant(8, CAYLEY_CONNECTION)
    mapping = analysis_service.isomorphic_small(
        vq3, circulant, small_cap=cfg.SMALL_GRAPH_CAP
    )
    if mapping is None:
        click.echo(cli_messages.get_message("cayley_missing"))
        finish(False)
        return

    click.echo(cli_messages.get_message("cayley_found"))
    labeled = {vq3.format_vertex(v): image for v, image in mapping.items()}
    for source, image in labeled.items():
        click.echo(
            cli_messages.get_message("cayley_mapping", source=source, target=image)
        )
    write_report(out, {"mapping": labeled})
    finish(True)
