import factory
from factory.random import randgen

from fairreps.groups.models import Permutation
from fairreps.groups.models import PermGroup


def random_image(degree: int) -> tuple[int, ...]:
    image = list(range(degree))
    randgen.shuffle(image)
    return tuple(image)


class PermutationFactory(factory.Factory):
    image = factory.LazyAttribute(lambda o: random_image(o.degree))

    class Params:
        degree = 5

    class Meta:
        model = Permutation


class PermGroupFactory(factory.Factory):
    """A random subgroup of Sym(n) given by one to three random generators."""

    n = factory.LazyFunction(lambda: randgen.randint(2, 9))
    generators = factory.LazyAttribute(
        lambda o: tuple(Permutation(random_image(o.n)) for _ in range(o.generator_count)),
    )

    class Params:
        generator_count = factory.LazyFunction(lambda: randgen.randint(1, 3))

    class Meta:
        model = PermGroup
