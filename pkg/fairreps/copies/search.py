"""Enumeration of (not necessarily induced) copies of a pattern in a host."""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterable

from fairreps.conf import settings
from fairreps.copies.models import Copy
from fairreps.graphs.models import Edge
from fairreps.graphs.models import Graph
from fairreps.graphs.models import normalize_edge
from fairreps.utils.exceptions.errors import CapExceededError
from fairreps.utils.exceptions.errors import InvalidInputError

logger = logging.getLogger(__name__)


def _pattern_order(pattern: Graph) -> list[int]:
    """Breadth-first order per component, highest degree first, so each vertex after a root has a mapped neighbour."""
    order: list[int] = []
    seen: set[int] = set()
    roots = sorted(pattern.vertices, key=lambda v: (-pattern.degree(v), v))
    for root in roots:
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in sorted(pattern.adjacency[u], key=lambda v: (-pattern.degree(v), v)):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def enumerate_copies(pattern: Graph, host: Graph) -> list[Copy]:
    """
    All distinct copies of ``pattern`` in ``host``, sorted by their edge lists.

    Embeddings are found by backtracking with degree pruning; embeddings with
    the same image collapse to one copy.
    """
    if isolated := [v for v in pattern.vertices if pattern.degree(v) == 0]:
        msg = f"pattern has isolated vertices {isolated}"
        raise InvalidInputError(msg)
    if pattern.n == 0 or pattern.n > host.n or len(pattern) > len(host):
        return []

    order = _pattern_order(pattern)
    position = {v: i for i, v in enumerate(order)}
    # For each pattern vertex, the neighbours placed before it.
    earlier = [[u for u in pattern.adjacency[v] if position[u] < position[v]] for v in order]
    pattern_edges = pattern.sorted_edges
    host_adj = host.adjacency
    limit = settings.COPY_LIMIT

    found: set[Copy] = set()
    images: list[int] = [-1] * pattern.n
    used: set[int] = set()

    def record() -> None:
        edges = frozenset(normalize_edge(images[u], images[v]) for u, v in pattern_edges)
        found.add(Copy(frozenset(images), edges))
        if len(found) > limit:
            msg = f"more than {limit} copies"
            raise CapExceededError(msg, cap=limit)

    def extend(depth: int) -> None:
        if depth == len(order):
            record()
            return
        v = order[depth]
        anchors = earlier[depth]
        if anchors:
            candidates: Iterable[int] = set(host_adj[images[anchors[0]]]).intersection(
                *(host_adj[images[u]] for u in anchors[1:]),
            )
        else:
            candidates = host.vertices
        need = pattern.degree(v)
        for w in sorted(candidates):
            if w in used or host.degree(w) < need:
                continue
            images[v] = w
            used.add(w)
            extend(depth + 1)
            used.discard(w)
        images[v] = -1

    extend(0)
    copies = sorted(found, key=lambda c: c.sort_key)
    logger.debug("%d copies of a %d-edge pattern in a %d-edge host", len(copies), len(pattern), len(host))
    return copies


def copies_hit_by(copies: Iterable[Copy], x: Iterable[Edge]) -> tuple[list[Copy], list[Copy]]:
    """Split ``copies`` into those whose edge set meets ``x`` and those it misses."""
    xs = frozenset(normalize_edge(*e) for e in x)
    hit: list[Copy] = []
    missed: list[Copy] = []
    for c in copies:
        (hit if c.hit_by(xs) else missed).append(c)
    return hit, missed
