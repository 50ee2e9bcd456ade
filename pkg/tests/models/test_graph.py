"""
Unit tests for the explicit graph entity.
"""

from vqcube.models.graph import Graph
from vqcube.models.graph import from_edges
from vqcube.schemas.enums import GraphFamily


def test_rows_are_sorted_and_edges_listed_once():
    """Test that neighbour rows are sorted and each edge appears once."""
    g = from_edges(4, [(2, 0), (0, 1), (3, 2), (1, 3)])
    assert g.neighbors(0) == (1, 2)
    assert list(g.edges()) == [(0, 1), (0, 2), (1, 3), (2, 3)]
    assert g.edge_count == 4
    assert g.degrees() == {2: 4}


def test_has_edge_is_symmetric_and_range_checked():
    g = from_edges(3, [(0, 1)])
    assert g.has_edge(0, 1)
    assert g.has_edge(1, 0)
    assert not g.has_edge(1, 2)
    assert not g.has_edge(0, 7)
    assert not g.has_vertex(-1)


def test_is_simple_detects_asymmetric_rows():
    """Test that a one-sided adjacency entry is not a simple graph."""
    assert from_edges(3, [(0, 1), (1, 2)]).is_simple()
    assert not Graph(2, GraphFamily.GENERIC, [[1], []]).is_simple()
    assert not Graph(1, GraphFamily.GENERIC, [[0]]).is_simple()


def test_labels_use_dimension_for_labeled_families(vq3):
    """Test label widths: n for VQ_n and Q_n, bit length for the rest."""
    assert vq3.format_vertex(1) == "001"
    circulant = Graph(8, GraphFamily.CIRCULANT, [[] for _ in range(8)])
    assert circulant.format_vertex(5) == "101"
    assert from_edges(1, []).format_vertex(0) == "0"


def test_equality_compares_adjacency(vq3):
    same = Graph(3, GraphFamily.GENERIC, vq3.adjacency)
    assert same == vq3
    assert hash(same) == hash(vq3)
    assert "edges=12" in repr(vq3)
