"""
Commands for transport automorphisms and vertex-transitivity sweeps.
"""

from pathlib import Path

import click

from vqcube.cli.utils import finish
from vqcube.cli.utils import get_settings
from vqcube.cli.utils import handle_errors
from vqcube.cli.utils import parse_label
from vqcube.cli.utils import write_report
from vqcube.core.messages import cli_messages
from vqcube.schemas.dto import VertexLabel
from vqcube.schemas.enums import VerifyMode
from vqcube.services import automorphism_service
from vqcube.services import export_service


@click.command()
@click.argument("n", type=int)
@click.argument("source")
@click.argument("target")
@click.option("--trace", is_flag=True, help="Print the construction steps.")
@click.option("--out", type=click.Path(path_type=Path), help="Write the form here.")
@click.pass_context
@handle_errors
def transport(
    ctx: click.Context,
    n: int,
    source: str,
    target: str,
    trace: bool,
    out: Path | None,
) -> None:
    """Build an automorphism of VQ_n sending SOURCE to TARGET."""
    cfg = get_settings(ctx)
    x = parse_label(n, source, "SOURCE")
    y = parse_label(n, target, "TARGET")

    automorphism, steps = automorphism_service.transport_with_trace(
        x, y, base_case_cap=cfg.BASE_CASE_CAP
    )
    form = automorphism_service.format_automorphism(automorphism)
    image = automorphism_service.apply(automorphism, x)
    hits = image == y

    click.echo(cli_messages.get_message("transport_form", form=form))
    click.echo(
        cli_messages.get_message(
            "transport_image",
            source=x,
            image=image,
            verdict="ok" if hits else f"expected {y}",
        )
    )
    if trace:
        for step in steps:
            click.echo(
                cli_messages.get_message(
                    "transport_case",
                    dim=step.dim,
                    case=step.case.value,
                    detail=step.detail,
                ).rstrip()
            )
    if out is not None:
        export_service.write_text(out, form + "\n")

    if n > cfg.SIZE_CAP:
        click.echo(
            cli_messages.get_message("transport_skipped", n=n, cap=cfg.SIZE_CAP)
        )
        finish(hits)

    verdict = automorphism_service.is_automorphism(
        automorphism, size_cap=cfg.SIZE_CAP
    )
    if verdict.ok:
        click.echo(cli_messages.get_message("transport_verified"))
    else:
        click.echo(
            cli_messages.get_message("transport_rejected", witness=verdict.witness)
        )
    finish(hits and verdict.ok)


@click.command()
@click.argument("n", type=int)
@click.option(
    "--mode",
    type=click.Choice([m.value for m in VerifyMode]),
    default=VerifyMode.FULL.value,
    show_default=True,
)
@click.option("--samples", type=int, help="Pairs to draw in sampled mode.")
@click.option("--source", help="Source label for full mode (default all zeros).")
@click.option("--out", type=click.Path(path_type=Path), help="Write a JSON report.")
@click.pass_context
@handle_errors
def verify(
    ctx: click.Context,
    n: int,
    mode: str,
    samples: int | None,
    source: str | None,
    out: Path | None,
) -> None:
    """Check transport over every target (full) or random pairs (sampled)."""
    cfg = get_settings(ctx)
    verify_mode = VerifyMode(mode)
    source_label: VertexLabel | None = (
        parse_label(n, source, "--source") if source is not None else None
    )
    report = automorphism_service.verify_vertex_transitivity(
        n,
        verify_mode,
        source=source_label,
        sample_count=samples if samples is not None else cfg.SAMPLE_COUNT,
        seed=cfg.SEED,
        exhaustive_cap=cfg.EXHAUSTIVE_CAP,
        size_cap=cfg.SIZE_CAP,
    )
    key = (
        "verify_summary"
        if verify_mode is VerifyMode.FULL
        else "verify_summary_sampled"
    )
    click.echo(
        cli_messages.get_message(key, verified=report.verified, checked=report.checked)
    )
    for failed_source, failed_target in report.failures:
        click.echo(
            cli_messages.get_message(
                "verify_failure", source=failed_source, target=failed_target
            )
        )
    write_report(out, report)
    finish(report.passed)
