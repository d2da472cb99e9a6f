"""
The canonical minimum vertex cover of a bipartite graph.

The A-vertices lying in every minimum cover together with the B-vertices
lying in at least one form a minimum cover fixed by every part-preserving
automorphism (Dulmage-Mendelsohn). Membership is decided per vertex with one
matching computation each instead of building the decomposition.
"""

from __future__ import annotations

import logging

from fairreps.matching.hopcroft_karp import max_matching
from fairreps.matching.models import BipartiteGraph
from fairreps.matching.models import Cover
from fairreps.matching.models import Membership
from fairreps.utils.exceptions.errors import PipelineDefect

logger = logging.getLogger(__name__)


def _tau(g: BipartiteGraph) -> int:
    return len(max_matching(g))


def _membership(g: BipartiteGraph, tau: int, *, a: int | None = None, b: int | None = None) -> Membership:
    if a is not None:
        neighbours = g.adj_a[a]
        without_v = g.without(a_removed=[a])
        without_closed = g.without(a_removed=[a], b_removed=neighbours)
    else:
        assert b is not None
        neighbours = g.adj_b[b]
        without_v = g.without(b_removed=[b])
        without_closed = g.without(a_removed=neighbours, b_removed=[b])
    if not neighbours:
        # Isolated vertices belong to no minimum cover.
        return Membership(in_some=False, in_all=False)
    in_some = _tau(without_v) == tau - 1
    # A cover avoiding v must contain all of N(v).
    in_all = len(neighbours) + _tau(without_closed) > tau
    return Membership(in_some=in_some, in_all=in_all)


def min_cover_membership(g: BipartiteGraph) -> tuple[list[Membership], list[Membership]]:
    """Per-vertex membership flags for the A side and the B side."""
    tau = _tau(g)
    a_flags = [_membership(g, tau, a=a) for a in range(g.a_size)]
    b_flags = [_membership(g, tau, b=b) for b in range(g.b_size)]
    for flag in (*a_flags, *b_flags):
        assert flag.in_some or not flag.in_all
    return a_flags, b_flags


def invariant_min_cover(g: BipartiteGraph) -> Cover:
    tau = _tau(g)
    a_flags, b_flags = min_cover_membership(g)
    cover = Cover(
        frozenset(a for a, flag in enumerate(a_flags) if flag.in_all),
        frozenset(b for b, flag in enumerate(b_flags) if flag.in_some),
    )
    if not cover.covers(g) or len(cover) != tau:
        logger.error("canonical cover check failed: size %d, matching %d", len(cover), tau)
        msg = "canonical cover is not a minimum vertex cover"
        raise PipelineDefect(msg, tau=tau, size=len(cover))
    logger.debug("canonical cover: tau=%d, |A part|=%d", tau, len(cover.a_part))
    return cover
