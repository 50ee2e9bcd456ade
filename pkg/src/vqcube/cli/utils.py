"""
Shared helpers for the command modules: label parsing, error mapping and
report output.
"""

from collections.abc import Callable
import functools
from pathlib import Path
import sys
from typing import Any
from typing import NoReturn
from typing import TypeVar

import click
from pydantic import BaseModel
from pydantic import ValidationError

from vqcube.config import Settings
from vqcube.core.logging import log_manager
from vqcube.core.messages import cli_messages
from vqcube.schemas.dto import VertexLabel
from vqcube.services import export_service
from vqcube.services.errors import VQCubeError


EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

F = TypeVar("F", bound=Callable[..., Any])


def get_settings(ctx: click.Context) -> Settings:
    return ctx.find_root().obj


def parse_label(n: int, text: str, param: str = "LABEL") -> VertexLabel:
    """An MSB-first binary label of exactly n bits."""
    try:
        return VertexLabel.parse(text, dim=n)
    except (ValueError, ValidationError) as e:
        raise click.BadParameter(str(e), param_hint=param) from e


def fail_usage(details: str) -> NoReturn:
    click.echo(cli_messages.get_message("error_prefix", details=details), err=True)
    sys.exit(EXIT_USAGE)


def handle_errors(func: F) -> F:
    """Maps service errors to exit code 2 with a one-line message."""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except (VQCubeError, ValidationError) as e:
            fail_usage(str(e))
        except OSError as e:
            log_manager.log_error("unexpected_error", error_details=e)
            fail_usage(str(e))

    return wrapper  # type: ignore[return-value]


def write_report(out: Path | None, report: BaseModel | dict) -> None:
    if out is None:
        return
    export_service.write_text(out, export_service.report_to_json(report))
    click.echo(cli_messages.get_message("report_written", path=out))


def finish(passed: bool) -> None:
    """Exit code contract: 0 when every check passed, 1 otherwise."""
    sys.exit(EXIT_OK if passed else EXIT_CHECK_FAILED)
