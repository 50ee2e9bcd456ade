"""
Service layer for graph metrics and structural checks.

BFS distances, diameter and exact average distance (one BFS suffices for a
vertex-transitive family), bounded per-edge cycle counts and the
edge-transitivity witness built on them, and small-graph isomorphism.
"""

from collections import deque
from fractions import Fraction
from typing import Dict
from typing import FrozenSet
from typing import List
from typing import Optional
from typing import Set
from typing import Tuple
from typing import Union

from vqcube.config import settings
from vqcube.core.logging import log_manager
from vqcube.models.automorphism import Automorphism
from vqcube.models.graph import Graph
from vqcube.schemas.dto import EdgeCycleProfile
from vqcube.schemas.dto import EdgeTransitivityReport
from vqcube.schemas.dto import EdgeTransitivityWitness
from vqcube.schemas.dto import MetricsReport
from vqcube.schemas.dto import VertexLabel
from vqcube.schemas.enums import GraphFamily
from vqcube.schemas.enums import MetricsMode
from vqcube.services import topology_service
from vqcube.services.errors import ContractError
from vqcube.services.errors import LabelRangeError
from vqcube.services.errors import ResourceCapError
from vqcube.services.search import first_isomorphism


UNREACHABLE = -1
# Largest VQ_n searched edge by edge for an edge-transitivity witness.
WITNESS_SEARCH_LIMIT = 6
# X=0101, Y=1101, Z=0001: XZ lies on a 5-cycle, XY does not.
VQ4_WITNESS = ((0b0101, 0b0001), (0b0101, 0b1101), 5)

Vertex = Union[int, VertexLabel]
Edge = Tuple[Vertex, Vertex]


def _vertex(g: Graph, x: Vertex) -> int:
    value = x.value if isinstance(x, VertexLabel) else x
    if not g.has_vertex(value):
        raise LabelRangeError(f"vertex {x} is not in the graph")
    return value


def _edge(g: Graph, e: Edge) -> Tuple[int, int]:
    u, v = _vertex(g, e[0]), _vertex(g, e[1])
    if not g.has_edge(u, v):
        raise ContractError(
            f"{g.format_vertex(u)}-{g.format_vertex(v)} is not an edge"
        )
    return u, v


def _edge_labels(g: Graph, u: int, v: int) -> Tuple[str, str]:
    return g.format_vertex(u), g.format_vertex(v)


# --- Distances ---


def bfs_distances(g: Graph, src: Vertex) -> List[int]:
    """Hop distances from `src`; unreachable vertices get `UNREACHABLE`."""
    start = _vertex(g, src)
    dist = [UNREACHABLE] * g.vertex_count
    dist[start] = 0
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if dist[w] == UNREACHABLE:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def _source_totals(g: Graph, src: int) -> Tuple[int, int]:
    """(eccentricity, sum of distances) from one source."""
    dist = bfs_distances(g, src)
    if UNREACHABLE in dist:
        raise ContractError("distance metrics need a connected graph")
    return max(dist), sum(dist)


def metrics(g: Graph, mode: Optional[MetricsMode] = None) -> MetricsReport:
    """
    Diameter, exact average distance and eccentricity profile.

    Single-source mode runs one BFS from vertex 0 and extrapolates, which is
    valid only for vertex-transitive families; it is the default for them.
    All-sources mode runs a BFS from every vertex.

    Raises:
        ContractError: For single-source mode on a generic graph, or a
            disconnected graph.
    """
    if mode is None:
        mode = (
            MetricsMode.SINGLE_SOURCE
            if g.family.is_vertex_transitive
            else MetricsMode.ALL_SOURCES
        )
    if mode is MetricsMode.SINGLE_SOURCE and not g.family.is_vertex_transitive:
        raise ContractError(
            "single-source metrics need a vertex-transitive family, "
            f"got {g.family.value}"
        )

    size = g.vertex_count
    if mode is MetricsMode.SINGLE_SOURCE:
        eccentricity, total = _source_totals(g, 0)
        profile = {eccentricity: size}
        total *= size
    else:
        profile = {}
        total = 0
        for v in range(size):
            eccentricity, partial = _source_totals(g, v)
            profile[eccentricity] = profile.get(eccentricity, 0) + 1
            total += partial

    pairs = size * (size - 1)
    average = Fraction(total, pairs) if pairs else Fraction(0)
    report = MetricsReport(
        n=g.n,
        diameter=max(profile),
        average_distance_num=average.numerator,
        average_distance_den=average.denominator,
        mode=mode,
        eccentricity_profile=dict(sorted(profile.items())),
    )
    log_manager.log_debug(
        "metrics_done", n=g.n, mode=mode.value, diameter=report.diameter
    )
    return report


def compare(
    n: int, mode: Optional[MetricsMode] = None, size_cap: Optional[int] = None
) -> Dict[GraphFamily, MetricsReport]:
    """Metrics of VQ_n next to those of Q_n."""
    return {
        GraphFamily.VARIETAL: metrics(
            topology_service.build_recursive(n, size_cap=size_cap), mode
        ),
        GraphFamily.HYPERCUBE: metrics(
            topology_service.build_hypercube(n, size_cap=size_cap), mode
        ),
    }


# --- Cycles through an edge ---


def cycles_through_edge(
    g: Graph, e: Edge, length: int, length_cap: Optional[int] = None
) -> int:
    """
    Number of distinct simple cycles of exactly `length` edges containing e.

    Each cycle is the edge e plus a simple path of `length - 1` edges between
    its endpoints; paths are enumerated depth-first, pruned by the BFS
    distance to the far endpoint, and deduplicated as edge sets.

    Raises:
        ContractError: If e is not an edge or the length is out of range.
    """
    cap = settings.CYCLE_LENGTH_CAP if length_cap is None else length_cap
    if not 3 <= length <= cap:
        raise ContractError(f"cycle length must lie in 3..{cap}, got {length}")
    u, v = _edge(g, e)

    to_target = bfs_distances(g, v)
    steps = length - 1
    on_path = [False] * g.vertex_count
    on_path[u] = True
    path = [u]
    cycles: Set[FrozenSet[Tuple[int, int]]] = set()

    def walk(w: int, remaining: int) -> None:
        if remaining == 0:
            if w == v:
                edge_set = {(min(a, b), max(a, b)) for a, b in zip(path, path[1:])}
                edge_set.add((min(u, v), max(u, v)))
                cycles.add(frozenset(edge_set))
            return
        for x in g.neighbors(w):
            if on_path[x] or to_target[x] == UNREACHABLE:
                continue
            if x == v and remaining != 1:
                continue
            if to_target[x] > remaining - 1:
                continue
            on_path[x] = True
            path.append(x)
            walk(x, remaining - 1)
            path.pop()
            on_path[x] = False

    walk(u, steps)
    log_manager.log_debug(
        "cycle_count",
        edge="-".join(_edge_labels(g, u, v)),
        count=len(cycles),
        length=length,
    )
    return len(cycles)


def cycle_profile(
    g: Graph, e: Edge, max_length: Optional[int] = None
) -> EdgeCycleProfile:
    """Cycle counts of e for every length 3..max_length."""
    top = settings.CYCLE_LENGTH_CAP if max_length is None else max_length
    u, v = _edge(g, e)
    counts = {
        length: cycles_through_edge(g, (u, v), length, length_cap=top)
        for length in range(3, top + 1)
    }
    return EdgeCycleProfile(edge=_edge_labels(g, u, v), counts=counts)


def refute_edge_transitivity(
    n: int = 4, max_length: Optional[int] = None
) -> EdgeTransitivityReport:
    """
    Looks for two edges of VQ_n lying on different numbers of L-cycles.

    For n = 4 the pair X=0101, Y=1101, Z=0001 at L=5 is tried first. Otherwise
    lengths 3..max_length are scanned in order and, at the first length where
    counts differ, the first edge (in sorted order) is paired with the first
    edge whose count differs from it. An empty report is not a proof of
    edge-transitivity.
    """
    top = settings.CYCLE_LENGTH_CAP if max_length is None else max_length
    if n > WITNESS_SEARCH_LIMIT:
        raise ResourceCapError(
            "refute_edge_transitivity", n, WITNESS_SEARCH_LIMIT, "witness_limit"
        )
    g = topology_service.build_recursive(n)
    report = EdgeTransitivityReport(n=n, max_length=top)

    def witness(
        a: Tuple[int, int], count_a: int, b: Tuple[int, int], count_b: int, length: int
    ) -> EdgeTransitivityReport:
        log_manager.log_info("witness_found", length=length)
        return EdgeTransitivityReport(
            n=n,
            max_length=top,
            witness=EdgeTransitivityWitness(
                n=n,
                length=length,
                edge_a=_edge_labels(g, *a),
                count_a=count_a,
                edge_b=_edge_labels(g, *b),
                count_b=count_b,
            ),
        )

    if n == 4 and VQ4_WITNESS[2] <= top:
        a, b, length = VQ4_WITNESS
        count_a = cycles_through_edge(g, a, length, length_cap=top)
        count_b = cycles_through_edge(g, b, length, length_cap=top)
        if count_a != count_b:
            return witness(a, count_a, b, count_b, length)

    edges = list(g.edges())
    if len(edges) < 2:
        return report
    for length in range(3, top + 1):
        first = cycles_through_edge(g, edges[0], length, length_cap=top)
        for other in edges[1:]:
            count = cycles_through_edge(g, other, length, length_cap=top)
            if count != first:
                return witness(edges[0], first, other, count, length)
    return report


def image_edge(a: Automorphism, e: Tuple[int, int]) -> Tuple[int, int]:
    """The image of an edge under an automorphism, smaller endpoint first."""
    x, y = a(e[0]), a(e[1])
    return (x, y) if x < y else (y, x)


# --- Isomorphism ---


def isomorphic_small(
    g: Graph, h: Graph, small_cap: Optional[int] = None
) -> Optional[Dict[int, int]]:
    """
    An adjacency-preserving bijection g -> h, or None when none exists.

    Raises:
        ResourceCapError: If either graph has more vertices than the cap.
    """
    cap = settings.SMALL_GRAPH_CAP if small_cap is None else small_cap
    largest = max(g.vertex_count, h.vertex_count)
    if largest > cap:
        raise ResourceCapError("isomorphic_small", largest, cap, "small_graph_cap")
    log_manager.log_debug("isomorphism_search", vertices=largest)
    mapping = first_isomorphism(g, h)
    if mapping is None:
        return None
    return dict(enumerate(mapping))
