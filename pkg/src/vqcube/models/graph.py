"""
The explicit graph entity shared by every builder and analysis.
"""

from bisect import bisect_left
from collections.abc import Iterable
from collections.abc import Iterator
from collections.abc import Sequence

from vqcube.schemas.dto import VertexLabel
from vqcube.schemas.enums import GraphFamily


class Graph:
    """
    An immutable simple undirected graph on vertices 0..N-1.

    Neighbour lists are stored as sorted tuples. For the labeled families
    (varietal, hypercube) `n` is the dimension and N = 2^n; for circulant and
    generic graphs `n` is the vertex count.
    """

    __slots__ = ("_n", "_family", "_adjacency", "_edge_count")

    def __init__(
        self,
        n: int,
        family: GraphFamily,
        adjacency: Iterable[Iterable[int]],
    ) -> None:
        self._n = n
        self._family = family
        self._adjacency: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(neighbours)) for neighbours in adjacency
        )
        self._edge_count = sum(len(a) for a in self._adjacency) // 2

    @property
    def n(self) -> int:
        return self._n

    @property
    def family(self) -> GraphFamily:
        return self._family

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adjacency

    @property
    def vertex_count(self) -> int:
        return len(self._adjacency)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    @property
    def is_labeled(self) -> bool:
        return self._family in (GraphFamily.VARIETAL, GraphFamily.HYPERCUBE)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def has_vertex(self, v: int) -> bool:
        return 0 <= v < len(self._adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        """Binary search in the sorted neighbour list of `u`."""
        if not (self.has_vertex(u) and self.has_vertex(v)):
            return False
        row = self._adjacency[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yields every edge once as (u, v) with u < v, in sorted order."""
        for u, row in enumerate(self._adjacency):
            for v in row:
                if u < v:
                    yield u, v

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges())

    def degrees(self) -> dict[int, int]:
        """Degree profile: degree -> number of vertices."""
        profile: dict[int, int] = {}
        for row in self._adjacency:
            profile[len(row)] = profile.get(len(row), 0) + 1
        return dict(sorted(profile.items()))

    def is_simple(self) -> bool:
        """True when adjacency is symmetric, irreflexive and duplicate-free."""
        for u, row in enumerate(self._adjacency):
            if len(set(row)) != len(row):
                return False
            for v in row:
                if v == u or not self.has_edge(v, u):
                    return False
        return True

    def label(self, v: int) -> VertexLabel:
        """The binary label of `v`, padded to the dimension."""
        if self.is_labeled:
            return VertexLabel(value=v, dim=self._n)
        width = max(1, (self.vertex_count - 1).bit_length())
        return VertexLabel(value=v, dim=width)

    def format_vertex(self, v: int) -> str:
        return str(self.label(v))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adjacency == other._adjacency

    def __hash__(self) -> int:
        return hash(self._adjacency)

    def __repr__(self) -> str:
        return (
            f"Graph(family={self._family.value}, n={self._n}, "
            f"vertices={self.vertex_count}, edges={self._edge_count})"
        )


def from_edges(vertex_count: int, edges: Sequence[tuple[int, int]]) -> Graph:
    """Builds a generic graph from an edge list."""
    rows: list[set[int]] = [set() for _ in range(vertex_count)]
    for u, v in edges:
        rows[u].add(v)
        rows[v].add(u)
    return Graph(vertex_count, GraphFamily.GENERIC, rows)
