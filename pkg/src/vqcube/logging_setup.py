"""
Configures the Loguru logger as the logging backend for the package.

This module provides a single setup function: logs go to stderr (and to a
rotating file when one is configured) so that standard output stays reserved
for command results.
"""

import sys
from typing import NoReturn

from loguru import logger
from loguru._logger import Logger

from .config import Settings
from .config import settings


def _setup_logging(cfg: Settings = settings) -> Logger:
    """
    Initializes and configures the Loguru logger for the entire package.

    It sets up a colourful, human-readable stderr sink and, when `LOG_FILE` is
    set, a detailed file sink. Calling it again replaces the sinks, which the
    CLI does after layering its own settings.

    Returns:
        The configured Loguru logger instance.
    """
    logger.remove()
    logger.enable("vqcube")

    if cfg.LOG_FILE is not None:
        try:
            cfg.LOG_FILE.parent.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            _critical_exit(
                f"Failed to create log directory {cfg.LOG_FILE.parent}: {e}"
            )

        logger.add(
            sink=cfg.LOG_FILE,
            level=cfg.LOG_LEVEL.upper(),
            format=(
                "{time:YYYY-MM-DD HH:mm:ss.SSS} | {level:<8} | "
                "{name}:{function}:{line} - {message}"
            ),
            rotation="1 MB",
            backtrace=cfg.DEBUG,
            diagnose=cfg.DEBUG,
            catch=True,
        )

    logger.add(
        sink=sys.stderr,
        level=cfg.LOG_LEVEL.upper(),
        format=(
            "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | "
            "<level>{level:<8}</level> | "
            "<cyan>{name}</cyan>:<cyan>{function}</cyan> - <level>{message}</level>"
        ),
        colorize=True,
    )

    return logger  # type: ignore


def _critical_exit(message: str) -> NoReturn:
    """
    Prints a critical error to stderr and exits the program.

    Used for unrecoverable startup errors.
    """
    sys.stderr.write(f"FATAL: {message}\n")
    sys.exit(1)


log = _setup_logging()
