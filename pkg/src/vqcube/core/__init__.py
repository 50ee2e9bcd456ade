"""Core system components: message and log catalogs."""

from .logging import log_manager
from .messages import cli_messages


__all__ = ["cli_messages", "log_manager"]
