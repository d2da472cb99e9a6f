from __future__ import annotations

from typing import TypeAlias

from collections.abc import Iterable
from collections.abc import Iterator
from dataclasses import dataclass
from dataclasses import field
from functools import cached_property

from fairreps.utils.exceptions.errors import InvalidInputError

Edge: TypeAlias = tuple[int, int]
EdgeSet: TypeAlias = frozenset[Edge]


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def edge_set(edges: Iterable[Iterable[int]]) -> EdgeSet:
    """Build an EdgeSet from any iterable of pairs, normalising orientation."""
    result = set()
    for pair in edges:
        u, v = pair
        result.add(normalize_edge(int(u), int(v)))
    return frozenset(result)


@dataclass(frozen=True)
class Graph:
    """
    Finite undirected simple graph on the vertices ``0..n-1``.

    Edges are stored as ``(u, v)`` with ``u < v``. Instances are immutable;
    derived structures (adjacency, edge ids) are computed once on demand.
    """

    n: int
    edges: EdgeSet = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            msg = f"vertex count must be nonnegative, got {self.n}"
            raise InvalidInputError(msg)
        normalized = set()
        for u, v in self.edges:
            if u == v:
                msg = f"loop at vertex {u}"
                raise InvalidInputError(msg)
            if not (0 <= u < self.n and 0 <= v < self.n):
                msg = f"edge {{{u},{v}}} has an endpoint outside [0, {self.n})"
                raise InvalidInputError(msg)
            normalized.add(normalize_edge(u, v))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[int]], n: int | None = None) -> Graph:
        es = edge_set(edges)
        if n is None:
            n = 1 + max((v for e in es for v in e), default=-1)
        return cls(n, es)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        """Edge id of every edge: its position in ``sorted_edges``."""
        return {e: i for i, e in enumerate(self.sorted_edges)}

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        neighbours: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            neighbours[u].add(v)
            neighbours[v].add(u)
        return tuple(frozenset(s) for s in neighbours)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def edge_ids(self, edges: Iterable[Edge]) -> frozenset[int]:
        try:
            return frozenset(self.edge_index[normalize_edge(*e)] for e in edges)
        except KeyError as exc:
            msg = f"edge {exc.args[0]} is not an edge of the graph"
            raise InvalidInputError(msg) from exc

    def edges_of(self, ids: Iterable[int]) -> EdgeSet:
        try:
            return frozenset(self.sorted_edges[i] for i in ids)
        except IndexError as exc:
            msg = f"edge id out of range [0, {len(self.edges)})"
            raise InvalidInputError(msg) from exc

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.sorted_edges)

    def __len__(self) -> int:
        return len(self.edges)


def delete_edges(g: Graph, x: Iterable[Edge]) -> Graph:
    """Return ``g`` without the edges in ``x``; every edge of ``x`` must be in ``g``."""
    removed = edge_set(x)
    if missing := removed - g.edges:
        msg = f"cannot delete edges absent from the graph: {sorted(missing)}"
        raise InvalidInputError(msg)
    return Graph(g.n, g.edges - removed)
