"""
Global fixtures for the pytest test suite.
"""

from loguru import logger
import pytest

from vqcube.models.graph import Graph
from vqcube.services import topology_service


_DRAWN_EDGES: dict[int, set[tuple[str, str]]] = {
    1: {("0", "1")},
    2: {("00", "01"), ("01", "11"), ("10", "11"), ("00", "10")},
    3: {
        ("000", "001"),
        ("001", "101"),
        ("100", "101"),
        ("000", "100"),
        ("010", "011"),
        ("011", "110"),
        ("110", "111"),
        ("010", "111"),
        ("000", "010"),
        ("001", "011"),
        ("101", "111"),
        ("100", "110"),
    },
    4: {
        ("0000", "0001"),
        ("0001", "0101"),
        ("0100", "0101"),
        ("0000", "0100"),
        ("0010", "0011"),
        ("0011", "0110"),
        ("0110", "0111"),
        ("0010", "0111"),
        ("0000", "0010"),
        ("0001", "0011"),
        ("0101", "0111"),
        ("0100", "0110"),
        ("1000", "1001"),
        ("1001", "1101"),
        ("1100", "1101"),
        ("1000", "1100"),
        ("1010", "1011"),
        ("1011", "1110"),
        ("1110", "1111"),
        ("1010", "1111"),
        ("1000", "1010"),
        ("1001", "1011"),
        ("1101", "1111"),
        ("1100", "1110"),
        ("0101", "1101"),
        ("0111", "1111"),
        ("0110", "1110"),
        ("0100", "1100"),
        ("0001", "1001"),
        ("0011", "1011"),
        ("0010", "1010"),
        ("0000", "1000"),
    },
}


@pytest.fixture(scope="session")
def drawn_edges() -> dict[int, set[tuple[str, str]]]:
    """Edge lists of VQ_1..VQ_4 as drawn, smaller label first."""
    return _DRAWN_EDGES


@pytest.fixture(scope="session")
def vq3() -> Graph:
    return topology_service.build_recursive(3)


@pytest.fixture(scope="session")
def vq4() -> Graph:
    return topology_service.build_recursive(4)


@pytest.fixture(scope="session", autouse=True)
def _quiet_loguru():
    """Keeps the package silent, as it is when imported as a library."""
    logger.remove()
    logger.disable("vqcube")
    yield
