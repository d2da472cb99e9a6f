from __future__ import annotations

import logging
from collections import deque
from collections.abc import Callable
from collections.abc import Hashable
from collections.abc import Iterable
from collections.abc import Iterator
from collections.abc import Sequence
from dataclasses import dataclass
from dataclasses import field
from functools import cached_property
from typing import Any

from fairreps.conf import settings
from fairreps.graphs.models import Edge
from fairreps.graphs.models import Graph
from fairreps.graphs.models import normalize_edge
from fairreps.utils.exceptions.errors import CapExceededError
from fairreps.utils.exceptions.errors import InvalidInputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection on ``0..n-1`` in image form: ``image[i]`` is the image of ``i``."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        image = tuple(self.image)
        if sorted(image) != list(range(len(image))):
            msg = f"not a bijection on 0..{len(image) - 1}: {list(image)}"
            raise InvalidInputError(msg)
        object.__setattr__(self, "image", image)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @property
    def degree(self) -> int:
        return len(self.image)

    def __call__(self, point: int) -> int:
        # Points past the degree are fixed.
        return self.image[point] if point < len(self.image) else point

    def apply_edge(self, edge: Edge) -> Edge:
        return normalize_edge(self(edge[0]), self(edge[1]))

    def compose(self, other: Permutation) -> Permutation:
        """``self`` after ``other``."""
        return Permutation(tuple(self.image[i] for i in other.image))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.image)
        for i, j in enumerate(self.image):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.image))

    def is_automorphism(self, g: Graph) -> bool:
        return self.degree == g.n and all(self.apply_edge(e) in g.edges for e in g.edges)


class UnionFind:
    def __init__(self, elements: Iterable[Hashable]) -> None:
        self.parent: dict[Any, Any] = {x: x for x in elements}
        self.rank: dict[Any, int] = dict.fromkeys(self.parent, 0)

    def find(self, x: Any) -> Any:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: Any, y: Any) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x


@dataclass(frozen=True)
class OrbitPartition:
    """
    Partition of a finite ground set into classes.

    Classes are sorted internally and ordered by their smallest element, so
    class ids are reproducible.
    """

    classes: tuple[tuple[Any, ...], ...]
    index: dict[Any, int] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        classes = tuple(sorted((tuple(sorted(c)) for c in self.classes if c), key=lambda c: c[0]))
        index: dict[Any, int] = {}
        for cid, cls in enumerate(classes):
            for element in cls:
                if element in index:
                    msg = f"element {element!r} lies in two classes"
                    raise InvalidInputError(msg)
                index[element] = cid
        object.__setattr__(self, "classes", classes)
        object.__setattr__(self, "index", index)

    @classmethod
    def singletons(cls, elements: Iterable[Any]) -> OrbitPartition:
        return cls(tuple((e,) for e in elements))

    @property
    def ground(self) -> frozenset[Any]:
        return frozenset(self.index)

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self) -> Iterator[tuple[Any, ...]]:
        return iter(self.classes)

    def class_of(self, element: Any) -> int:
        return self.index[element]

    def relabel(self, mapping: Callable[[Any], Any]) -> OrbitPartition:
        return OrbitPartition(tuple(tuple(mapping(e) for e in c) for c in self.classes))

    def extended(self, elements: Iterable[Any]) -> OrbitPartition:
        """Add every unknown element as a fixed point (a singleton class)."""
        extra = [(e,) for e in sorted(set(elements) - self.ground)]
        if not extra:
            return self
        return OrbitPartition(self.classes + tuple(extra))

    def is_union_of_classes(self, subset: Iterable[Any]) -> bool:
        """True iff ``subset`` is invariant: every class is inside it or disjoint from it."""
        chosen = set(subset)
        return all(
            all(e in chosen for e in self.classes[self.index[x]]) if x in self.index else True
            for x in chosen
        )

    def union_of(self, class_ids: Iterable[int]) -> frozenset[Any]:
        return frozenset(e for cid in class_ids for e in self.classes[cid])


def find_orbits(
    generators: Sequence[Permutation],
    space: Iterable[Any],
    action: Callable[[Permutation, Any], Any],
) -> OrbitPartition:
    """Orbits of a general group action, by union-find closure over the generators."""
    points = list(space)
    uf = UnionFind(points)
    for g in generators:
        for x in points:
            uf.union(x, action(g, x))
    orbits: dict[Any, list[Any]] = {}
    for x in points:
        orbits.setdefault(uf.find(x), []).append(x)
    return OrbitPartition(tuple(tuple(c) for c in orbits.values()))


@dataclass(frozen=True)
class PermGroup:
    """The group generated by ``generators`` acting on ``0..n-1``."""

    n: int
    generators: tuple[Permutation, ...] = ()

    def __post_init__(self) -> None:
        gens = tuple(self.generators)
        for g in gens:
            if g.degree != self.n:
                msg = f"generator of degree {g.degree} in a group of degree {self.n}"
                raise InvalidInputError(msg)
        object.__setattr__(self, "generators", gens)

    @classmethod
    def trivial(cls, n: int) -> PermGroup:
        return cls(n)

    @classmethod
    def from_images(cls, n: int, images: Iterable[Sequence[int]]) -> PermGroup:
        return cls(n, tuple(Permutation(tuple(i)) for i in images))

    def elements(self, cap: int | None = None) -> Iterator[Permutation]:
        """
        Enumerate the generated group by breadth-first closure.

        Raises ``CapExceededError`` once more than ``cap`` elements turn up.
        """
        if cap is None:
            cap = settings.GROUP_ORDER_CAP
        identity = Permutation.identity(self.n)
        seen = {identity.image}
        queue = deque([identity])
        yield identity
        while queue:
            current = queue.popleft()
            for g in self.generators:
                nxt = g.compose(current)
                if nxt.image in seen:
                    continue
                seen.add(nxt.image)
                if len(seen) > cap:
                    msg = f"group has more than {cap} elements"
                    raise CapExceededError(msg, cap=cap)
                queue.append(nxt)
                yield nxt

    @cached_property
    def order(self) -> int:
        count = sum(1 for _ in self.elements())
        logger.debug("group of degree %d has order %d", self.n, count)
        return count

    def vertex_orbits(self) -> OrbitPartition:
        return find_orbits(self.generators, range(self.n), lambda g, x: g(x))

    def edge_orbits(self, g: Graph) -> OrbitPartition:
        return find_orbits(self.generators, g.sorted_edges, lambda p, e: p.apply_edge(e))


def group_order(group: PermGroup) -> int:
    return group.order


def orbits(group: PermGroup, action: str, g: Graph) -> OrbitPartition:
    """Vertex or edge orbits of ``group`` acting on ``g``."""
    if group.n != g.n:
        msg = f"group of degree {group.n} cannot act on a graph with {g.n} vertices"
        raise InvalidInputError(msg)
    if action == "vertices":
        return group.vertex_orbits()
    if action == "edges":
        for p in group.generators:
            if not p.is_automorphism(g):
                msg = "a generator does not preserve the edge set"
                raise InvalidInputError(msg)
        return group.edge_orbits(g)
    msg = f"unknown action {action!r}; expected 'vertices' or 'edges'"
    raise InvalidInputError(msg)


def induced_on_edges(group: PermGroup, g: Graph) -> PermGroup:
    """The same group acting on the edge ids of ``g``."""
    index = g.edge_index
    return PermGroup(
        len(g),
        tuple(Permutation(tuple(index[p.apply_edge(e)] for e in g.sorted_edges)) for p in group.generators),
    )
