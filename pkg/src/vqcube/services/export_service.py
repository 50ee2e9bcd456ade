"""
Text formats: edge lists, DOT, JSON adjacency and key-sorted JSON reports.

Every writer is deterministic: same graph, same bytes.
"""

import json
from pathlib import Path

from pydantic import BaseModel

from vqcube.models.graph import Graph
from vqcube.schemas.enums import ExportFormat
from vqcube.schemas.enums import GraphFamily
from vqcube.services import topology_service


def to_edgelist(g: Graph) -> str:
    """One "LABEL LABEL" line per edge, lines sorted, LF endings."""
    lines = sorted(
        f"{g.format_vertex(u)} {g.format_vertex(v)}" for u, v in g.edges()
    )
    return "".join(f"{line}\n" for line in lines)


def _edge_attributes(g: Graph, u: int, v: int) -> str:
    if g.family is GraphFamily.VARIETAL:
        edge_class = topology_service.classify_values(u, v)
        if edge_class is None:
            return ""
        return f" [kind={edge_class.kind.value}, dimension={edge_class.dimension}]"
    if g.family is GraphFamily.HYPERCUBE:
        return f" [kind=normal, dimension={(u ^ v).bit_length()}]"
    return ""


def graph_name(g: Graph) -> str:
    return {
        GraphFamily.VARIETAL: f"VQ{g.n}",
        GraphFamily.HYPERCUBE: f"Q{g.n}",
        GraphFamily.CIRCULANT: f"C{g.n}",
        GraphFamily.GENERIC: f"G{g.n}",
    }[g.family]


def to_dot(g: Graph) -> str:
    """An undirected DOT graph; node names are the binary labels."""
    lines = [f"graph {graph_name(g)} {{"]
    lines.extend(f'  "{g.format_vertex(v)}";' for v in range(g.vertex_count))
    lines.extend(
        f'  "{g.format_vertex(u)}" -- "{g.format_vertex(v)}"'
        f"{_edge_attributes(g, u, v)};"
        for u, v in g.edges()
    )
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: Graph) -> str:
    """Adjacency as a key-sorted JSON object of label -> neighbour labels."""
    payload = {
        "family": g.family.value,
        "n": g.n,
        "vertices": g.vertex_count,
        "edges": g.edge_count,
        "adjacency": {
            g.format_vertex(v): [g.format_vertex(w) for w in g.neighbors(v)]
            for v in range(g.vertex_count)
        },
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def render_graph(g: Graph, fmt: ExportFormat) -> str:
    return {
        ExportFormat.EDGELIST: to_edgelist,
        ExportFormat.DOT: to_dot,
        ExportFormat.JSON: to_json,
    }[fmt](g)


def report_to_json(report: BaseModel | dict) -> str:
    """Key-sorted JSON for one report or a mapping of reports."""
    if isinstance(report, BaseModel):
        payload = report.model_dump(mode="json")
    else:
        payload = {
            getattr(key, "value", key): value.model_dump(mode="json")
            if isinstance(value, BaseModel)
            else value
            for key, value in report.items()
        }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def write_text(path: Path, text: str) -> None:
    """Writes with LF line endings regardless of platform."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
