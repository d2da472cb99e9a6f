from itertools import permutations

import networkx as nx
import pytest

from fairreps.graphs.generators import bowtie
from fairreps.graphs.generators import complete_graph
from fairreps.graphs.generators import cycle_graph
from fairreps.graphs.generators import empty_graph
from fairreps.graphs.generators import path_graph
from fairreps.graphs.generators import tailed_triangle
from fairreps.graphs.models import Graph
from fairreps.graphs.tests.factories import GraphFactory
from fairreps.groups.automorphisms import automorphism_group
from fairreps.groups.automorphisms import is_vertex_transitive
from fairreps.groups.automorphisms import refine_colours
from fairreps.groups.models import group_order


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


@pytest.mark.parametrize(
    ("g", "order"),
    [
        (cycle_graph(3), 6),
        (path_graph(3), 2),
        (tailed_triangle(), 2),
        (complete_graph(4), 24),
        (cycle_graph(5), 10),
        (bowtie(), 8),
        (empty_graph(0), 1),
        (empty_graph(4), 24),
    ],
)
def test_group_order(g: Graph, order: int):
    assert group_order(automorphism_group(g)) == order


def test_tailed_triangle_swaps_the_base_vertices():
    group = automorphism_group(tailed_triangle())
    assert [p.image for p in group.generators] == [(0, 2, 1, 3)]


def test_generators_are_automorphisms_and_sorted():
    for g in GraphFactory.build_batch(60):
        group = automorphism_group(g)
        assert all(p.is_automorphism(g) for p in group.generators)
        assert list(group.generators) == sorted(group.generators)


def test_order_matches_exhaustive_search():
    for g in GraphFactory.build_batch(80, n=6):
        brute = sum(
            1
            for image in permutations(range(g.n))
            if all((min(image[u], image[v]), max(image[u], image[v])) in g.edges for u, v in g.edges)
        )
        assert group_order(automorphism_group(g)) == brute


def test_order_matches_networkx():
    for g in GraphFactory.build_batch(60, n=7):
        matcher = nx.algorithms.isomorphism.GraphMatcher(to_networkx(g), to_networkx(g))
        assert group_order(automorphism_group(g)) == sum(1 for _ in matcher.isomorphisms_iter())


def test_search_is_deterministic():
    g = Graph.from_edges([(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5)])
    assert automorphism_group(g) == automorphism_group(g)


@pytest.mark.parametrize(
    ("g", "expected"),
    [
        (cycle_graph(5), True),
        (path_graph(3), False),
        (complete_graph(4), True),
        (bowtie(), False),
        (empty_graph(0), False),
        (empty_graph(3), True),
    ],
)
def test_is_vertex_transitive(g: Graph, expected: bool):  # noqa: FBT001
    assert is_vertex_transitive(g) is expected


def test_colour_refinement_separates_the_tail():
    colours = refine_colours(tailed_triangle())
    assert colours[1] == colours[2]
    assert len({colours[0], colours[1], colours[3]}) == 3
