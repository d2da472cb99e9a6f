"""
Invariant edge representatives for tadpole patterns.

A tadpole is a connected pattern K with exactly one vertex of degree one
whose removal leaves a vertex-transitive body K0. Given a host and an edge
set X meeting every copy of K, the pipeline produces an Aut(host)-invariant
edge set Y meeting every copy with |Y| <= (|E(K)| - 1) · |X|:

1. symmetrize X against the weighted pair family of overlapping body copies
   to get Y';
2. delete Y' and find a canonical minimum cover Q' of the auxiliary
   bipartite graph Delta of the pruned host;
3. Y'' takes every body-copy edge on the A-vertices of Q' and the edges that
   are B-vertices of Q'; Y = Y' ∪ Y''.

Each inequality along the way is recorded in the trace; a failing one is
flagged rather than raised.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Iterable
from fractions import Fraction

from fairreps.copies.models import Copy
from fairreps.copies.search import copies_hit_by
from fairreps.copies.search import enumerate_copies
from fairreps.covers.representativeness import upsilon_edge
from fairreps.graphs.connectivity import edge_connectivity
from fairreps.graphs.connectivity import is_connected
from fairreps.graphs.models import Edge
from fairreps.graphs.models import EdgeSet
from fairreps.graphs.models import Graph
from fairreps.graphs.models import delete_edges
from fairreps.graphs.models import edge_set
from fairreps.groups.automorphisms import automorphism_group
from fairreps.groups.automorphisms import is_vertex_transitive
from fairreps.groups.models import OrbitPartition
from fairreps.matching.dulmage_mendelsohn import invariant_min_cover
from fairreps.matching.models import BipartiteGraph
from fairreps.symmetrize.checks import WEIGHTED
from fairreps.symmetrize.checks import check_representatives
from fairreps.symmetrize.models import WeightedFamily
from fairreps.symmetrize.models import WeightFunction
from fairreps.symmetrize.theorems import symmetrize_weighted
from fairreps.tadpole.models import BoundCheck
from fairreps.tadpole.models import Delta
from fairreps.tadpole.models import PipelineTrace
from fairreps.tadpole.models import TadpoleDecomposition
from fairreps.utils.exceptions.errors import InvalidInputError
from fairreps.utils.exceptions.errors import NotRepresentativeError
from fairreps.utils.exceptions.errors import PipelineDefect

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


def validate_tadpole(k: Graph) -> TadpoleDecomposition:
    if len(k) < 2 or not is_connected(k):
        msg = "a tadpole must be connected with at least two edges"
        raise InvalidInputError(msg)
    leaves = [v for v in k.vertices if k.degree(v) == 1]
    if len(leaves) != 1:
        msg = f"a tadpole has exactly one vertex of degree one, found {len(leaves)}"
        raise InvalidInputError(msg)
    tail = leaves[0]
    (anchor,) = k.adjacency[tail]
    relabel = {v: i for i, v in enumerate(w for w in k.vertices if w != tail)}
    body = Graph.from_edges(
        ((relabel[u], relabel[v]) for u, v in k.edges if tail not in (u, v)),
        n=k.n - 1,
    )
    if not is_vertex_transitive(body):
        msg = "the body left after removing the tail is not vertex-transitive"
        raise InvalidInputError(msg)
    if edge_connectivity(body) < 2:
        msg = "the body is vertex-transitive but not 2-edge-connected"
        raise InvalidInputError(msg)
    return TadpoleDecomposition(k, tail, (min(tail, anchor), max(tail, anchor)), body)


def _overlapping_pairs(copies: list[Copy]) -> Iterable[tuple[Copy, Copy]]:
    """Pairs of copies sharing a vertex, each pair once, in copy order."""
    by_vertex: dict[int, list[int]] = defaultdict(list)
    for i, c in enumerate(copies):
        for v in c.vertices:
            by_vertex[v].append(i)
    for i, c in enumerate(copies):
        partners = sorted({j for v in c.vertices for j in by_vertex[v] if j > i})
        for j in partners:
            yield c, copies[j]


def build_pair_family(gamma: Graph, body: Graph) -> WeightedFamily:
    """
    Weight functions of pairs of body copies with connected union, neither
    vertex set containing the other: weight 1 on shared edges and 1/2 on the
    edges of exactly one copy.
    """
    copies = enumerate_copies(body, gamma)
    functions: dict[WeightFunction, None] = {}
    for first, second in _overlapping_pairs(copies):
        if first.vertices <= second.vertices or second.vertices <= first.vertices:
            continue
        shared = first.edges & second.edges
        weights = {gamma.edge_index[e]: Fraction(1) for e in shared}
        weights.update((gamma.edge_index[e], HALF) for e in first.edges ^ second.edges)
        functions.setdefault(WeightFunction(weights))
    logger.debug("pair family: %d functions from %d body copies", len(functions), len(copies))
    return WeightedFamily(tuple(functions))


def build_delta(gamma_prime: Graph, body: Graph, *, strict: bool = True) -> Delta:
    """
    The bipartite graph of body-copy vertex sets against edges.

    With ``strict`` a pair of overlapping but distinct vertex sets raises
    ``PipelineDefect``; otherwise the pairs are reported in ``overlaps``.
    """
    copies = enumerate_copies(body, gamma_prime)
    grouped: dict[frozenset[int], set[Edge]] = defaultdict(set)
    for c in copies:
        grouped[c.vertices].update(c.edges)
    a_labels = tuple(sorted(grouped, key=lambda s: sorted(s)))
    overlaps = tuple(
        (i, j)
        for i in range(len(a_labels))
        for j in range(i + 1, len(a_labels))
        if not a_labels[i].isdisjoint(a_labels[j])
    )
    if overlaps and strict:
        msg = f"{len(overlaps)} pairs of body copies overlap without coinciding"
        raise PipelineDefect(msg, overlaps=overlaps)
    b_labels = gamma_prime.sorted_edges
    edges = frozenset(
        (i, j)
        for i, a in enumerate(a_labels)
        for j, (u, v) in enumerate(b_labels)
        if (u in a) != (v in a)
    )
    return Delta(
        BipartiteGraph(len(a_labels), len(b_labels), edges),
        a_labels,
        b_labels,
        tuple(frozenset(grouped[a]) for a in a_labels),
        overlaps,
    )


def _split_orbits(orbits: OrbitPartition, y: EdgeSet) -> int:
    return sum(1 for cls in orbits if 0 < len(y.intersection(cls)) < len(cls))


def symmetric_tadpole_representatives(
    k: Graph,
    gamma: Graph,
    x: Iterable[Edge] | None = None,
) -> PipelineTrace:
    decomposition = validate_tadpole(k)
    body = decomposition.body
    factor = len(k) - 1

    if x is None:
        xs = gamma.edges_of(upsilon_edge(k, gamma).witness)
        logger.info("no X given; using an optimal one of size %d", len(xs))
    else:
        xs = edge_set(x)
        if missing := xs - gamma.edges:
            msg = f"X contains edges absent from the host: {sorted(missing)}"
            raise InvalidInputError(msg)
    copies = enumerate_copies(k, gamma)
    _, missed = copies_hit_by(copies, xs)
    if missed:
        raise NotRepresentativeError(missed, detail=f"X misses {len(missed)} copies of the pattern")

    checks: list[BoundCheck] = []
    x_ids = gamma.edge_ids(xs)
    orbits = automorphism_group(gamma).edge_orbits(gamma)
    edge_orbits = orbits.relabel(lambda e: gamma.edge_index[e])

    # Step 1: symmetrize against the pair family.
    pair_family = build_pair_family(gamma, body)
    if violations := check_representatives(pair_family, x_ids, WEIGHTED):
        msg = "X hits every copy but is not a weighted system for the pair family"
        raise PipelineDefect(msg, violations=violations)
    for f in pair_family.functions:
        if f.total != factor:
            msg = f"pair function with total weight {f.total}, expected {factor}"
            raise PipelineDefect(msg)
    y_prime = gamma.edges_of(symmetrize_weighted(pair_family, x_ids, edge_orbits).y)
    checks.append(BoundCheck("|Y'| <= (|E(K)|-1)·|X ∩ Y'|", len(y_prime), factor * len(xs & y_prime)))

    # Step 2: prune and check the two properties of the pruned host.
    gamma_prime = delete_edges(gamma, y_prime)
    x_prime = xs - y_prime
    _, survivors = copies_hit_by(enumerate_copies(k, gamma_prime), x_prime)
    checks.append(BoundCheck("copies of K in Γ' missed by X'", len(survivors), 0))
    delta = build_delta(gamma_prime, body, strict=False)
    checks.append(BoundCheck("overlapping distinct body vertex sets in Γ'", len(delta.overlaps), 0))
    if delta.overlaps:
        logger.warning("pruned host has %d overlapping body vertex sets", len(delta.overlaps))

    # Step 3: the cover read off X' and the canonical cover.
    inside = {e for e in x_prime for a in delta.a_labels if e[0] in a and e[1] in a}
    q_a = frozenset(
        i for i, a in enumerate(delta.a_labels) if any(u in a and v in a for u, v in x_prime)
    )
    q_b = frozenset(j for j, e in enumerate(delta.b_labels) if e in x_prime and e not in inside)
    uncovered = sum(1 for a, b in delta.graph.edges if a not in q_a and b not in q_b)
    checks.append(BoundCheck("Δ edges not covered by Q", uncovered, 0))
    checks.append(BoundCheck("|Q| <= |X'|", len(q_a) + len(q_b), len(x_prime)))
    q_prime = invariant_min_cover(delta.graph)
    checks.append(BoundCheck("|Q'| <= |Q|", len(q_prime), len(q_a) + len(q_b)))

    # Step 4: assemble Y'' and Y.
    for i in sorted(q_prime.a_part):
        checks.append(
            BoundCheck(f"body edges on A-vertex {i}", len(delta.a_edges[i]), decomposition.body_edge_count),
        )
    y2_a = frozenset(e for i in q_prime.a_part for e in delta.a_edges[i])
    y2_b = frozenset(delta.b_labels[j] for j in q_prime.b_part)
    y = y_prime | y2_a | y2_b
    checks.append(BoundCheck("|Y''| <= (|E(K)|-1)·|X'|", len(y2_a | y2_b), factor * len(x_prime)))
    checks.append(BoundCheck("|Y| <= (|E(K)|-1)·|X|", len(y), factor * len(xs)))
    remaining = enumerate_copies(k, delete_edges(gamma, y))
    checks.append(BoundCheck("copies of K surviving Γ \\ Y", len(remaining), 0))
    checks.append(BoundCheck("edge orbits split by Y", _split_orbits(orbits, y), 0))

    trace = PipelineTrace(
        decomposition=decomposition,
        gamma=gamma,
        x=xs,
        y_prime=y_prime,
        gamma_prime=gamma_prime,
        x_prime=x_prime,
        delta=delta,
        q_a=q_a,
        q_b=q_b,
        q_prime=q_prime,
        y_double_prime_a=y2_a,
        y_double_prime_b=y2_b,
        y=y,
        bound_checks=tuple(checks),
    )
    for check in trace.failed_checks:
        logger.warning("check failed: %s (%d > %d)", check.name, check.lhs, check.rhs)
    logger.info(
        "tadpole pipeline: |X|=%d, |Y'|=%d, |Y''|=%d, |Y|=%d",
        len(xs),
        len(y_prime),
        len(trace.y_double_prime),
        len(y),
    )
    return trace
