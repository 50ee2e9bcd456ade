"""
Service layer for the varietal hypercube topology.

Provides the closed-form label oracles (`dimension_neighbor`, `neighbors`,
`classify_edge`), the literal recursive builder used as their independent
oracle, and the baseline builders for hypercubes and circulant graphs.

Label oracles work on packed integers and never materialize a graph; the
builders refuse dimensions above the configured size cap.
"""

from typing import Dict
from typing import FrozenSet
from typing import List
from typing import Optional
from typing import Set
from typing import Tuple
from typing import Union

from vqcube.config import settings
from vqcube.core.logging import log_manager
from vqcube.models.graph import Graph
from vqcube.schemas.dto import EdgeClass
from vqcube.schemas.dto import VertexLabel
from vqcube.schemas.enums import EdgeKind
from vqcube.schemas.enums import GraphFamily
from vqcube.services.errors import ContractError
from vqcube.services.errors import LabelRangeError
from vqcube.services.errors import ResourceCapError


# Allowed (x_{d-1}x_{d-2}, y_{d-1}y_{d-2}) pairs across a crossing dimension d,
# x being the endpoint in the 0-half.
RULE_SET: FrozenSet[Tuple[int, int]] = frozenset(
    {(0b00, 0b00), (0b01, 0b01), (0b10, 0b11), (0b11, 0b10)}
)
CROSSING_PAIRS: FrozenSet[Tuple[int, int]] = frozenset({(0b10, 0b11), (0b11, 0b10)})


def is_crossing_dimension(d: int) -> bool:
    """Dimensions d = 3k, k >= 1, carry crossing edges."""
    return d >= 3 and d % 3 == 0


# --- Integer-level oracles ---


def neighbor_value(value: int, d: int) -> int:
    """
    The neighbour of `value` across the d-transversal cut.

    Bit d is flipped; at a crossing dimension with bit d-1 set, bit d-2 is
    flipped too.
    """
    y = value ^ (1 << (d - 1))
    if is_crossing_dimension(d) and (value >> (d - 2)) & 1:
        y ^= 1 << (d - 3)
    return y


def classify_values(x: int, y: int) -> Optional[EdgeClass]:
    """Classifies {x, y} as an edge of VQ_n, or returns None for a non-edge."""
    diff = x ^ y
    if diff == 0:
        raise ContractError("classify_edge needs two distinct labels")
    d = diff.bit_length()
    below = diff & ((1 << (d - 1)) - 1)

    if not is_crossing_dimension(d):
        return EdgeClass(dimension=d, kind=EdgeKind.NORMAL) if below == 0 else None

    # Bits strictly below d-2 must agree.
    if below & ((1 << (d - 3)) - 1):
        return None
    low, high = (x, y) if not (x >> (d - 1)) & 1 else (y, x)
    pair = ((low >> (d - 3)) & 0b11, (high >> (d - 3)) & 0b11)
    if pair not in RULE_SET:
        return None
    kind = EdgeKind.CROSSING if pair in CROSSING_PAIRS else EdgeKind.NORMAL
    return EdgeClass(dimension=d, kind=kind)


# --- Label-level operations ---


def dimension_neighbor(x: VertexLabel, d: int) -> VertexLabel:
    """Returns the unique neighbour of `x` across dimension `d`."""
    if not 1 <= d <= x.dim:
        raise LabelRangeError(f"dimension {d} is outside 1..{x.dim}")
    return VertexLabel(value=neighbor_value(x.value, d), dim=x.dim)


def neighbors(x: VertexLabel) -> List[VertexLabel]:
    """The n neighbours of `x`, listed by dimension 1..n."""
    return [dimension_neighbor(x, d) for d in range(1, x.dim + 1)]


def classify_edge(x: VertexLabel, y: VertexLabel) -> Optional[EdgeClass]:
    """
    Classifies the pair {x, y}.

    Returns the edge's dimension and kind when the labels are adjacent in
    VQ_n, None otherwise.

    Raises:
        ContractError: If the labels have different widths or are equal.
    """
    if x.dim != y.dim:
        raise ContractError(f"label widths differ: {x.dim} != {y.dim}")
    return classify_values(x.value, y.value)


# --- Builders ---


def _check_cap(what: str, n: int, size_cap: Optional[int]) -> None:
    cap = settings.SIZE_CAP if size_cap is None else size_cap
    if n < 0:
        raise LabelRangeError(f"{what} needs n >= 0, got {n}")
    if n > cap:
        log_manager.log_warning("graph_cap_exceeded", n=n, cap=cap)
        raise ResourceCapError(what, n, cap, "size_cap")


def build_recursive(n: int, size_cap: Optional[int] = None) -> Graph:
    """
    Builds VQ_n by the recursive definition.

    VQ_0 is K_1. Each step copies VQ_{k-1} into a 0-half and a 1-half and
    joins them through the rule set at dimensions divisible by 3, and by
    identical suffix elsewhere. This is deliberately independent of
    `neighbor_value`.
    """
    _check_cap("build_recursive", n, size_cap)

    adjacency: List[List[int]] = [[]]
    for k in range(1, n + 1):
        half = 1 << (k - 1)
        adjacency = [list(row) for row in adjacency] + [
            [v + half for v in row] for row in adjacency
        ]
        if not is_crossing_dimension(k):
            for x in range(half):
                adjacency[x].append(x + half)
                adjacency[x + half].append(x)
            continue
        shift = k - 3
        low_mask = (1 << shift) - 1
        for x in range(half):
            pair_bits = (x >> shift) & 0b11
            for a, b in RULE_SET:
                if a == pair_bits:
                    y = half | (b << shift) | (x & low_mask)
                    adjacency[x].append(y)
                    adjacency[y].append(x)

    graph = Graph(n, GraphFamily.VARIETAL, adjacency)
    log_manager.log_debug(
        "graph_built", family="varietal", n=n, vertices=graph.vertex_count
    )
    return graph


def build_from_oracle(n: int, size_cap: Optional[int] = None) -> Graph:
    """Builds VQ_n from the closed-form neighbour oracle."""
    _check_cap("build_from_oracle", n, size_cap)
    adjacency = [
        [neighbor_value(v, d) for d in range(1, n + 1)] for v in range(1 << n)
    ]
    return Graph(n, GraphFamily.VARIETAL, adjacency)


def build_hypercube(n: int, size_cap: Optional[int] = None) -> Graph:
    """Builds Q_n: labels adjacent iff they differ in exactly one bit."""
    _check_cap("build_hypercube", n, size_cap)
    adjacency = [[v ^ (1 << i) for i in range(n)] for v in range(1 << n)]
    graph = Graph(n, GraphFamily.HYPERCUBE, adjacency)
    log_manager.log_debug(
        "graph_built", family="hypercube", n=n, vertices=graph.vertex_count
    )
    return graph


def build_circulant(m: int, connection: Union[Set[int], FrozenSet[int]]) -> Graph:
    """
    Builds the circulant C(Z_m, S): i ~ (i + s) mod m for s in S.

    Raises:
        ContractError: If m < 1, an element lies outside 1..m-1, or S is not
            closed under s -> m - s.
    """
    if m < 1:
        raise ContractError(f"circulant needs m >= 1, got {m}")
    bad = sorted(s for s in connection if not 1 <= s <= m - 1)
    if bad:
        raise ContractError(f"connection elements {bad} lie outside 1..{m - 1}")
    asymmetric = sorted(s for s in connection if m - s not in connection)
    if asymmetric:
        raise ContractError(
            f"connection set is not symmetric: missing m - s for s in {asymmetric}"
        )
    adjacency = [{(i + s) % m for s in connection} for i in range(m)]
    graph = Graph(m, GraphFamily.CIRCULANT, adjacency)
    log_manager.log_debug("graph_built", family="circulant", n=m, vertices=m)
    return graph


# --- Decomposition helpers ---


def transversal_edges(n: int) -> List[Tuple[int, int, EdgeClass]]:
    """
    The n-transversal edges joining the 0-half and 1-half of VQ_n.

    Each entry is (x, y, class) with x in the 0-half, sorted by x.
    """
    if n < 1:
        raise LabelRangeError(f"transversal edges need n >= 1, got {n}")
    half = 1 << (n - 1)
    result = []
    for x in range(half):
        y = neighbor_value(x, n)
        edge_class = classify_values(x, y)
        assert edge_class is not None
        result.append((x, y, edge_class))
    return result


def crossing_edge_counts(graph: Graph) -> Dict[int, int]:
    """Number of crossing edges per dimension in a varietal graph."""
    if graph.family is not GraphFamily.VARIETAL:
        raise ContractError("crossing edges are defined for varietal graphs only")
    counts: Dict[int, int] = {}
    for u, v in graph.edges():
        edge_class = classify_values(u, v)
        if edge_class is None:
            raise ContractError(f"edge {u}-{v} is not an edge of VQ{graph.n}")
        if edge_class.kind is EdgeKind.CROSSING:
            counts[edge_class.dimension] = counts.get(edge_class.dimension, 0) + 1
    return dict(sorted(counts.items()))
