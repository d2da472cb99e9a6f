"""Small named graphs used by the corpora, the docs and the CLI examples."""

from __future__ import annotations

from itertools import combinations

from fairreps.graphs.models import Graph
from fairreps.utils.exceptions.errors import InvalidInputError


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(n), 2)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        msg = f"a cycle needs at least 3 vertices, got {n}"
        raise InvalidInputError(msg)
    return Graph.from_edges(((i, (i + 1) % n) for i in range(n)), n=n)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(((i, i + 1) for i in range(n - 1)), n=n)


def disjoint_union(*graphs: Graph) -> Graph:
    """Relabel consecutively: the first graph keeps its labels."""
    offset = 0
    edges = []
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph.from_edges(edges, n=offset)


def add_pendant(g: Graph, at: int) -> Graph:
    """Attach a new vertex ``g.n`` to ``at``."""
    return Graph(g.n + 1, g.edges | {(at, g.n)})


def bowtie() -> Graph:
    """Two triangles sharing vertex 0."""
    return Graph.from_edges([(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def tailed_cycle(length: int) -> Graph:
    """A cycle on ``0..length-1`` with a pendant vertex ``length`` at 0."""
    return add_pendant(cycle_graph(length), 0)


def tailed_triangle() -> Graph:
    return tailed_cycle(3)
