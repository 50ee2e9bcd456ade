"""Command-line front end."""

from .router import cli


__all__ = ["cli"]
