from __future__ import annotations

from typing import TypeAlias

from collections.abc import Iterable
from dataclasses import dataclass
from dataclasses import field
from functools import cached_property

from fairreps.utils.exceptions.errors import InvalidInputError

BipartiteEdge: TypeAlias = tuple[int, int]


@dataclass(frozen=True)
class BipartiteGraph:
    """
    Bipartite graph with parts ``A = 0..a_size-1`` and ``B = 0..b_size-1``.

    Edges are ``(a, b)`` index pairs.
    """

    a_size: int
    b_size: int
    edges: frozenset[BipartiteEdge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.a_size < 0 or self.b_size < 0:
            msg = "part sizes must be nonnegative"
            raise InvalidInputError(msg)
        edges = frozenset((int(a), int(b)) for a, b in self.edges)
        for a, b in edges:
            if not (0 <= a < self.a_size and 0 <= b < self.b_size):
                msg = f"edge ({a}, {b}) outside parts of sizes {self.a_size}, {self.b_size}"
                raise InvalidInputError(msg)
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, a_size: int, b_size: int, edges: Iterable[BipartiteEdge]) -> BipartiteGraph:
        return cls(a_size, b_size, frozenset(edges))

    @cached_property
    def adj_a(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.a_size)]
        for a, b in sorted(self.edges):
            adj[a].append(b)
        return tuple(tuple(x) for x in adj)

    @cached_property
    def adj_b(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.b_size)]
        for a, b in sorted(self.edges):
            adj[b].append(a)
        return tuple(tuple(x) for x in adj)

    def without(self, a_removed: Iterable[int] = (), b_removed: Iterable[int] = ()) -> BipartiteGraph:
        """The same parts with every edge at a removed vertex deleted."""
        ra, rb = set(a_removed), set(b_removed)
        return BipartiteGraph(
            self.a_size,
            self.b_size,
            frozenset((a, b) for a, b in self.edges if a not in ra and b not in rb),
        )


@dataclass(frozen=True)
class Matching:
    pairs: frozenset[BipartiteEdge]

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class Cover:
    a_part: frozenset[int]
    b_part: frozenset[int]

    def __len__(self) -> int:
        return len(self.a_part) + len(self.b_part)

    def covers(self, g: BipartiteGraph) -> bool:
        return all(a in self.a_part or b in self.b_part for a, b in g.edges)


@dataclass(frozen=True)
class Membership:
    """Whether a vertex lies in some, and in all, minimum vertex covers."""

    in_some: bool
    in_all: bool
