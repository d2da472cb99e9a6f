"""Edge and vertex representativeness of a pattern in a host graph."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from fairreps.copies.models import Copy
from fairreps.copies.search import enumerate_copies
from fairreps.covers.models import FamilyOfSets
from fairreps.covers.models import HittingResult
from fairreps.covers.solvers import min_hitting_set
from fairreps.covers.solvers import min_orbit_hitting_set
from fairreps.graphs.models import Graph
from fairreps.groups.automorphisms import automorphism_group

logger = logging.getLogger(__name__)


def edge_family(host: Graph, copies: Sequence[Copy]) -> FamilyOfSets:
    """The copies' edge sets as sets of host edge ids."""
    return FamilyOfSets(tuple(host.edge_ids(c.edges) for c in copies))


def vertex_family(copies: Sequence[Copy]) -> FamilyOfSets:
    return FamilyOfSets(tuple(c.vertices for c in copies))


def upsilon_edge(pattern: Graph, host: Graph, *, symmetric: bool = False) -> HittingResult:
    """
    Edge representativeness of ``pattern`` in ``host``.

    With ``symmetric`` the minimum runs over Aut(host)-invariant edge sets;
    the witness holds host edge ids.
    """
    copies = enumerate_copies(pattern, host)
    if not copies:
        return HittingResult(0, frozenset(), () if symmetric else None)
    family = edge_family(host, copies)
    logger.info("%d copies; solving %s edge representativeness", len(copies), "symmetric" if symmetric else "plain")
    if not symmetric:
        return min_hitting_set(family)
    edge_orbits = automorphism_group(host).edge_orbits(host).relabel(lambda e: host.edge_index[e])
    return min_orbit_hitting_set(family, edge_orbits)


def upsilon_vertex(pattern: Graph, host: Graph, *, symmetric: bool = False) -> HittingResult:
    """Vertex representativeness: the same minimum over vertex sets hitting every copy."""
    copies = enumerate_copies(pattern, host)
    if not copies:
        return HittingResult(0, frozenset(), () if symmetric else None)
    family = vertex_family(copies)
    if not symmetric:
        return min_hitting_set(family)
    return min_orbit_hitting_set(family, automorphism_group(host).vertex_orbits())


@dataclass(frozen=True)
class SymmetryCost:
    plain: HittingResult
    symmetric: HittingResult
    # |E(K)| for edges, |V(K)| for vertices: the worst case of the bound.
    bound_factor: int

    @property
    def ratio(self) -> Fraction | None:
        if self.plain.value == 0:
            return None
        return Fraction(self.symmetric.value, self.plain.value)

    @property
    def bound_holds(self) -> bool:
        return self.plain.value <= self.symmetric.value <= self.plain.value * self.bound_factor

    @property
    def tight(self) -> bool:
        """True when the host attains the bound factor exactly."""
        return self.plain.value > 0 and self.symmetric.value == self.plain.value * self.bound_factor


def cost_of_symmetry(pattern: Graph, host: Graph, *, vertices: bool = False) -> SymmetryCost:
    solve = upsilon_vertex if vertices else upsilon_edge
    return SymmetryCost(
        plain=solve(pattern, host, symmetric=False),
        symmetric=solve(pattern, host, symmetric=True),
        bound_factor=pattern.n if vertices else len(pattern),
    )
