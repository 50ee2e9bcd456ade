"""Varietal hypercube networks: topology, automorphisms and analyses."""

from loguru import logger


__version__ = "0.1.0"

# Silent as a library; the command line enables it in `_setup_logging`.
logger.disable("vqcube")
