"""
Backtracking search for adjacency-preserving bijections between small graphs.
"""

from collections import deque
from collections.abc import Iterator
from typing import List
from typing import Optional
from typing import Tuple

from vqcube.models.graph import Graph


def _bfs_order(g: Graph) -> List[int]:
    """Vertices in BFS order, component by component, so that every vertex
    after a component's root has an already-placed neighbour."""
    seen = [False] * g.vertex_count
    order: List[int] = []
    for root in range(g.vertex_count):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def iter_isomorphisms(g: Graph, h: Graph) -> Iterator[Tuple[int, ...]]:
    """
    Yields every bijection f with uv in E(g) <=> f(u)f(v) in E(h).

    Candidates are pruned by degree and by consistency with the vertices
    already mapped: a candidate must be adjacent to the images of all mapped
    neighbours and to no other mapped image.
    """
    size = g.vertex_count
    if size != h.vertex_count or g.edge_count != h.edge_count:
        return
    if g.degrees() != h.degrees():
        return

    order = _bfs_order(g)
    mapping = [-1] * size
    preimage = [-1] * size

    def extend(pos: int) -> Iterator[Tuple[int, ...]]:
        if pos == size:
            yield tuple(mapping)
            return
        v = order[pos]
        mapped = [mapping[u] for u in g.neighbors(v) if mapping[u] >= 0]
        candidates = h.neighbors(mapped[0]) if mapped else range(size)
        for w in candidates:
            if preimage[w] >= 0 or h.degree(w) != g.degree(v):
                continue
            if not all(h.has_edge(m, w) for m in mapped):
                continue
            if sum(1 for x in h.neighbors(w) if preimage[x] >= 0) != len(mapped):
                continue
            mapping[v] = w
            preimage[w] = v
            yield from extend(pos + 1)
            mapping[v] = -1
            preimage[w] = -1

    yield from extend(0)


def first_isomorphism(g: Graph, h: Graph) -> Optional[Tuple[int, ...]]:
    return next(iter_isomorphisms(g, h), None)
