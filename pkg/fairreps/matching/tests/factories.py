import factory
from factory.random import randgen

from fairreps.matching.models import BipartiteGraph


class BipartiteGraphFactory(factory.Factory):
    """Random bipartite graph with at most twelve vertices in total."""

    a_size = factory.LazyFunction(lambda: randgen.randint(0, 6))
    b_size = factory.LazyAttribute(lambda o: randgen.randint(0, 12 - o.a_size))
    edges = factory.LazyAttribute(
        lambda o: frozenset(
            (a, b) for a in range(o.a_size) for b in range(o.b_size) if randgen.random() < o.density
        ),
    )

    class Params:
        density = factory.LazyFunction(lambda: randgen.choice([0.2, 0.35, 0.5]))

    class Meta:
        model = BipartiteGraph
