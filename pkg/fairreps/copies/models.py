from __future__ import annotations

from dataclasses import dataclass

from fairreps.graphs.models import EdgeSet
from fairreps.groups.models import Permutation


@dataclass(frozen=True)
class Copy:
    """An occurrence of a pattern in a host: the image vertex set and edge set."""

    vertices: frozenset[int]
    edges: EdgeSet

    @property
    def sort_key(self) -> tuple[tuple[tuple[int, int], ...], tuple[int, ...]]:
        return tuple(sorted(self.edges)), tuple(sorted(self.vertices))

    def image(self, p: Permutation) -> Copy:
        return Copy(frozenset(p(v) for v in self.vertices), frozenset(p.apply_edge(e) for e in self.edges))

    def hit_by(self, x: EdgeSet) -> bool:
        return not self.edges.isdisjoint(x)
