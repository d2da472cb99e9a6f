from itertools import combinations

import factory
from factory.random import randgen

from fairreps.graphs.models import Graph


def random_edges(n: int, density: float) -> frozenset[tuple[int, int]]:
    return frozenset(e for e in combinations(range(n), 2) if randgen.random() < density)


class GraphFactory(factory.Factory):
    """Erdős-Rényi style graph on a small random vertex count."""

    n = factory.LazyFunction(lambda: randgen.randint(1, 8))
    edges = factory.LazyAttribute(lambda o: random_edges(o.n, o.density))

    class Params:
        density = 0.5

    class Meta:
        model = Graph
