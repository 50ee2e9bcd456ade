"""
Unit tests for the text writers.
"""

import json

from vqcube.schemas.enums import ExportFormat
from vqcube.schemas.enums import GraphFamily
from vqcube.services import analysis_service
from vqcube.services import export_service
from vqcube.services import topology_service


def test_edgelist_is_sorted_with_lf_endings():
    g = topology_service.build_recursive(2)
    assert export_service.to_edgelist(g) == "00 01\n00 10\n01 11\n10 11\n"


def test_edgelist_of_vq10_has_every_edge():
    """Test the 5120 lines of VQ_10."""
    text = export_service.to_edgelist(topology_service.build_recursive(10))
    lines = text.splitlines()
    assert len(lines) == 5120
    assert lines == sorted(lines)
    assert not text.endswith("\n\n")


def test_dot_marks_crossing_edges(vq3):
    """Test DOT node names and the kind/dimension edge attributes."""
    text = export_service.to_dot(vq3)
    assert text.startswith("graph VQ3 {\n")
    assert text.endswith("}\n")
    assert '  "000";' in text
    assert '"011" -- "110" [kind=crossing, dimension=3];' in text
    assert '"000" -- "100" [kind=normal, dimension=3];' in text
    assert text.count(" -- ") == 12


def test_dot_for_circulants_has_no_attributes():
    g = topology_service.build_circulant(4, {1, 3})
    text = export_service.to_dot(g)
    assert text.startswith("graph C4 {")
    assert '"00" -- "01";' in text


def test_json_adjacency(vq3):
    payload = json.loads(export_service.to_json(vq3))
    assert payload["family"] == "varietal"
    assert payload["edges"] == 12
    assert payload["adjacency"]["011"] == ["001", "010", "110"]


def test_render_graph_is_deterministic(vq4):
    """Test that rendering twice gives identical text in every format."""
    for fmt in ExportFormat:
        assert export_service.render_graph(vq4, fmt) == export_service.render_graph(
            vq4, fmt
        )


def test_report_to_json_uses_family_values():
    reports = analysis_service.compare(3)
    payload = json.loads(export_service.report_to_json(reports))
    assert set(payload) == {"hypercube", "varietal"}
    assert payload["varietal"]["average_distance_decimal"] == "1.571429"
    assert payload["hypercube"]["diameter"] == 3


def test_report_to_json_single_report(vq3):
    text = export_service.report_to_json(analysis_service.metrics(vq3))
    assert text.endswith("}\n")
    payload = json.loads(text)
    assert list(payload) == sorted(payload)
    assert payload["mode"] == "single-source-via-transitivity"


def test_write_text_creates_parents(tmp_path):
    target = tmp_path / "nested" / "graph.txt"
    export_service.write_text(target, "00 01\n")
    assert target.read_bytes() == b"00 01\n"


def test_graph_names():
    assert export_service.graph_name(topology_service.build_hypercube(2)) == "Q2"
    g = topology_service.build_circulant(8, {1, 4, 7})
    assert g.family is GraphFamily.CIRCULANT
    assert export_service.graph_name(g) == "C8"
