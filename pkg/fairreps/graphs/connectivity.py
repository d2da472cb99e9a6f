from __future__ import annotations

import logging
from collections import deque

from fairreps.graphs.models import Graph
from fairreps.utils.exceptions.errors import InvalidInputError

logger = logging.getLogger(__name__)


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    result = []
    for start in g.vertices:
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        component = []
        while queue:
            u = queue.popleft()
            component.append(u)
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        result.append(sorted(component))
    return result


def is_connected(g: Graph) -> bool:
    # The empty graph counts as connected.
    return len(components(g)) <= 1


def _max_flow(g: Graph, source: int, sink: int, bound: int) -> int:
    """
    Unit-capacity max flow between two vertices (Edmonds-Karp).

    Each undirected edge is a pair of opposite arcs of capacity one; ``net``
    holds the antisymmetric net flow. Stops once ``bound`` units are routed,
    since callers only need the minimum.
    """
    net: dict[tuple[int, int], int] = {}
    value = 0
    while value < bound:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            u = queue.popleft()
            for w in sorted(g.adjacency[u]):
                if w not in parent and net.get((u, w), 0) < 1:
                    parent[w] = u
                    queue.append(w)
        if sink not in parent:
            break
        v = sink
        while v != source:
            u = parent[v]
            net[(u, v)] = net.get((u, v), 0) + 1
            net[(v, u)] = net.get((v, u), 0) - 1
            v = u
        value += 1
    return value


def edge_connectivity(g: Graph) -> int:
    """
    Minimum number of edges whose removal disconnects ``g``.

    Computed as the smallest vertex-0-to-v minimum cut over all other v.
    """
    if g.n < 2:
        msg = "edge connectivity needs at least two vertices"
        raise InvalidInputError(msg)
    if not is_connected(g):
        msg = "edge connectivity is only defined here for connected graphs"
        raise InvalidInputError(msg)
    best = min(g.degree(v) for v in g.vertices)
    for v in range(1, g.n):
        best = min(best, _max_flow(g, 0, v, best))
    logger.debug("edge connectivity of %d-vertex graph: %d", g.n, best)
    return best
