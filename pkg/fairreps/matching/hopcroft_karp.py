"""
Hopcroft-Karp maximum matching, based on
https://en.wikipedia.org/wiki/Hopcroft%E2%80%93Karp_algorithm
"""

from __future__ import annotations

from collections import deque

from fairreps.matching.models import BipartiteGraph
from fairreps.matching.models import Matching

NIL = -1


class HopcroftKarp:
    """
    Maximum-cardinality matching, storing the temporary data for running the algorithm.

    Adjacency is scanned in index order, so the matching is reproducible.
    """

    def __init__(self, graph: BipartiteGraph) -> None:
        self.graph = graph
        self.match_a = [NIL] * graph.a_size
        self.match_b = [NIL] * graph.b_size
        self.dist: dict[int, int] = {}

    def _layer(self) -> bool:
        """Breadth-first layering from the free A vertices; True if a free B vertex is reachable."""
        inf = self.graph.a_size + 1
        queue: deque[int] = deque()
        for a in range(self.graph.a_size):
            if self.match_a[a] == NIL:
                self.dist[a] = 0
                queue.append(a)
            else:
                self.dist[a] = inf
        self.dist[NIL] = inf
        while queue:
            a = queue.popleft()
            if self.dist[a] < self.dist[NIL]:
                for b in self.graph.adj_a[a]:
                    nxt = self.match_b[b]
                    if self.dist[nxt] == inf:
                        self.dist[nxt] = self.dist[a] + 1
                        if nxt != NIL:
                            queue.append(nxt)
        return self.dist[NIL] != inf

    def _augment(self, a: int) -> bool:
        """Depth-first search for an augmenting path along the layering."""
        for b in self.graph.adj_a[a]:
            nxt = self.match_b[b]
            if self.dist[nxt] == self.dist[a] + 1 and (nxt == NIL or self._augment(nxt)):
                self.match_a[a] = b
                self.match_b[b] = a
                return True
        self.dist[a] = self.graph.a_size + 1
        return False

    def run(self) -> Matching:
        while self._layer():
            for a in range(self.graph.a_size):
                if self.match_a[a] == NIL:
                    self._augment(a)
        return Matching(frozenset((a, b) for a, b in enumerate(self.match_a) if b != NIL))


def max_matching(g: BipartiteGraph) -> Matching:
    matching = HopcroftKarp(g).run()
    assert len({a for a, _ in matching.pairs}) == len({b for _, b in matching.pairs}) == len(matching)
    assert matching.pairs <= g.edges
    return matching
