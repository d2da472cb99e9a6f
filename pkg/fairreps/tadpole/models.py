from __future__ import annotations

from dataclasses import dataclass

from fairreps.graphs.models import Edge
from fairreps.graphs.models import EdgeSet
from fairreps.graphs.models import Graph
from fairreps.matching.models import BipartiteGraph
from fairreps.matching.models import Cover


@dataclass(frozen=True)
class TadpoleDecomposition:
    """A tadpole pattern split into its tail and its vertex-transitive body."""

    pattern: Graph
    tail_vertex: int
    tail_edge: Edge
    # Body vertices are the pattern vertices other than the tail, relabelled in order.
    body: Graph

    @property
    def body_edge_count(self) -> int:
        return len(self.body)


@dataclass(frozen=True)
class Delta:
    """
    The auxiliary bipartite graph of a pruned host.

    A-vertices are vertex sets of body copies, B-vertices are host edges; an
    A-vertex and a B-vertex are adjacent when exactly one end of the edge lies
    in the vertex set.
    """

    graph: BipartiteGraph
    a_labels: tuple[frozenset[int], ...]
    b_labels: tuple[Edge, ...]
    # Union of the edge sets of all body copies on each A-vertex.
    a_edges: tuple[EdgeSet, ...]
    # Pairs of A-vertices whose vertex sets overlap without coinciding.
    overlaps: tuple[tuple[int, int], ...] = ()


@dataclass(frozen=True)
class BoundCheck:
    """One inequality ``lhs <= rhs`` of the construction, recorded with its outcome."""

    name: str
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs


@dataclass(frozen=True)
class PipelineTrace:
    decomposition: TadpoleDecomposition
    gamma: Graph
    x: EdgeSet
    y_prime: EdgeSet
    gamma_prime: Graph
    x_prime: EdgeSet
    delta: Delta
    q_a: frozenset[int]
    q_b: frozenset[int]
    q_prime: Cover
    y_double_prime_a: EdgeSet
    y_double_prime_b: EdgeSet
    y: EdgeSet
    bound_checks: tuple[BoundCheck, ...]

    @property
    def y_double_prime(self) -> EdgeSet:
        return self.y_double_prime_a | self.y_double_prime_b

    @property
    def failed_checks(self) -> tuple[BoundCheck, ...]:
        return tuple(c for c in self.bound_checks if not c.holds)

    @property
    def ok(self) -> bool:
        return not self.failed_checks
