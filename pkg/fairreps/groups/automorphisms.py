"""
Automorphism groups of small graphs by backtracking.

The search builds a strong generating set level by level: for the base
``0, 1, ..., n-1`` it looks, deepest level first, for one automorphism fixing
``0..i-1`` and sending ``i`` to each candidate image not already reached by
the generators found so far. Candidates are pruned by a stable vertex
colouring (iterated degree refinement) and by adjacency with the vertices
already mapped.
"""

from __future__ import annotations

import logging

from fairreps.graphs.models import Graph
from fairreps.groups.models import OrbitPartition
from fairreps.groups.models import Permutation
from fairreps.groups.models import PermGroup
from fairreps.groups.models import find_orbits

logger = logging.getLogger(__name__)


def refine_colours(g: Graph) -> tuple[int, ...]:
    """Stable colouring: start from degrees, split by neighbour colour multisets."""
    colours = tuple(g.degree(v) for v in g.vertices)
    while True:
        signatures = [
            (colours[v], tuple(sorted(colours[w] for w in g.adjacency[v]))) for v in g.vertices
        ]
        palette = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        refined = tuple(palette[sig] for sig in signatures)
        if len(set(refined)) == len(set(colours)):
            return refined
        colours = refined


class _ExtensionSearch:
    def __init__(self, g: Graph) -> None:
        self.g = g
        self.colours = refine_colours(g)

    def extend(self, fixed: dict[int, int]) -> Permutation | None:
        """Smallest-first backtracking completion of a partial vertex map, if one exists."""
        for v, w in fixed.items():
            if self.colours[v] != self.colours[w]:
                return None
        mapping = dict(fixed)
        for v, w in fixed.items():
            if not self._consistent(mapping, v, w):
                return None
        used = set(mapping.values())
        if self._search(mapping, used):
            return Permutation(tuple(mapping[v] for v in self.g.vertices))
        return None

    def _consistent(self, mapping: dict[int, int], v: int, w: int) -> bool:
        adjacency = self.g.adjacency
        for u, image in mapping.items():
            if u != v and (u in adjacency[v]) != (image in adjacency[w]):
                return False
        return True

    def _next_vertex(self, mapping: dict[int, int]) -> int:
        adjacency = self.g.adjacency
        return min(
            (v for v in self.g.vertices if v not in mapping),
            key=lambda v: (-sum(1 for u in adjacency[v] if u in mapping), v),
        )

    def _search(self, mapping: dict[int, int], used: set[int]) -> bool:
        if len(mapping) == self.g.n:
            return True
        v = self._next_vertex(mapping)
        adjacency = self.g.adjacency
        mapped_neighbours = [u for u in adjacency[v] if u in mapping]
        if mapped_neighbours:
            candidates = set(adjacency[mapping[mapped_neighbours[0]]])
            for u in mapped_neighbours[1:]:
                candidates &= adjacency[mapping[u]]
        else:
            candidates = set(self.g.vertices)
        for w in sorted(candidates - used):
            if self.colours[w] != self.colours[v] or not self._consistent(mapping, v, w):
                continue
            mapping[v] = w
            used.add(w)
            if self._search(mapping, used):
                return True
            del mapping[v]
            used.discard(w)
        return False


def automorphism_group(g: Graph) -> PermGroup:
    """Generators of Aut(g), deterministic for a given graph."""
    search = _ExtensionSearch(g)
    generators: list[Permutation] = []
    for level in reversed(range(g.n)):
        base = {v: v for v in range(level)}
        reached = _orbit_of(level, generators, g.n)
        for target in range(level + 1, g.n):
            if target in reached or search.colours[target] != search.colours[level]:
                continue
            found = search.extend({**base, level: target})
            if found is None:
                continue
            generators.append(found)
            reached = _orbit_of(level, generators, g.n)
    for p in generators:
        assert p.is_automorphism(g), f"search produced a non-automorphism {p.image}"
    generators.sort()
    logger.debug("automorphism search on %d vertices: %d generators", g.n, len(generators))
    return PermGroup(g.n, tuple(generators))


def _orbit_of(point: int, generators: list[Permutation], n: int) -> set[int]:
    partition: OrbitPartition = find_orbits(generators, range(n), lambda p, x: p(x))
    return set(partition.classes[partition.class_of(point)])


def is_vertex_transitive(g: Graph) -> bool:
    if g.n == 0:
        return False
    return len(automorphism_group(g).vertex_orbits()) == 1
