"""
Fixtures for the command-line tests.
"""

from click.testing import CliRunner
from loguru import logger
import pytest


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture(autouse=True)
def _reset_logging():
    """Each invocation attaches a stderr sink; drop it once the test ends."""
    yield
    logger.remove()
    logger.disable("vqcube")
