from __future__ import annotations

from collections.abc import Iterable
from collections.abc import Mapping
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction

from fairreps.groups.models import Permutation
from fairreps.utils.exceptions.errors import InvalidInputError

ONE = Fraction(1)


@dataclass(frozen=True)
class WeightFunction:
    """
    Nonnegative rational weights on element ids with finite support.

    Zero weights are dropped, so two functions are equal iff they agree everywhere.
    """

    support: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned: dict[int, Fraction] = {}
        for element, weight in self.support.items():
            w = Fraction(weight)
            if w < 0:
                msg = f"negative weight {w} on element {element}"
                raise InvalidInputError(msg)
            if w:
                cleaned[int(element)] = w
        object.__setattr__(self, "support", dict(sorted(cleaned.items())))

    @classmethod
    def indicator(cls, elements: Iterable[int], weight: Fraction = ONE) -> WeightFunction:
        return cls(dict.fromkeys(elements, weight))

    @property
    def key(self) -> frozenset[tuple[int, Fraction]]:
        return frozenset(self.support.items())

    def __hash__(self) -> int:
        return hash(self.key)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeightFunction) and self.key == other.key

    def __call__(self, element: int) -> Fraction:
        return self.support.get(element, Fraction(0))

    @property
    def total(self) -> Fraction:
        return sum(self.support.values(), Fraction(0))

    def weight_of(self, elements: Iterable[int]) -> Fraction:
        return sum((self(x) for x in set(elements)), Fraction(0))

    def normalized(self) -> WeightFunction:
        """Clamp every weight to at most one; representativeness is unchanged."""
        return WeightFunction({e: min(w, ONE) for e, w in self.support.items()})

    def precomposed(self, p: Permutation) -> WeightFunction:
        """The function ``u -> F(p(u))``."""
        inverse = p.inverse()
        return WeightFunction({inverse(e): w for e, w in self.support.items()})


@dataclass(frozen=True)
class WeightedFamily:
    functions: tuple[WeightFunction, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "functions", tuple(self.functions))

    def __len__(self) -> int:
        return len(self.functions)

    @property
    def weight_set(self) -> frozenset[Fraction]:
        return frozenset(w for f in self.functions for w in f.support.values())

    @property
    def elements(self) -> frozenset[int]:
        return frozenset(e for f in self.functions for e in f.support)

    @property
    def max_total(self) -> Fraction | None:
        return max((f.total for f in self.functions), default=None)

    def normalized(self) -> WeightedFamily:
        return WeightedFamily(tuple(f.normalized() for f in self.functions))


@dataclass(frozen=True)
class Violation:
    """A family member the candidate set does not represent well enough."""

    index: int
    achieved: Fraction
    required: Fraction


@dataclass(frozen=True)
class LedgerEntry:
    orbit: int
    size: int
    hits: int
    admitted: bool


@dataclass(frozen=True)
class SymmetrizationReport:
    """
    Outcome of one symmetrization.

    ``bound`` is ``max |F|`` (multiple mode) or ``max sum F`` (weighted
    modes); it is None for an empty family. ``auxiliary_size`` is the size of
    the weight-modelling set used by the product construction.
    """

    mode: str
    y: frozenset[int]
    x: frozenset[int]
    bound: Fraction | None
    k: int
    ledger: tuple[LedgerEntry, ...]
    auxiliary_size: int | None = None

    @property
    def bound_lhs(self) -> Fraction:
        return Fraction(self.k * len(self.y)) if self.mode == "multiple" else Fraction(len(self.y))

    @property
    def bound_rhs(self) -> Fraction | None:
        if self.bound is None:
            return None
        return len(self.x & self.y) * self.bound

    @property
    def bound_holds(self) -> bool:
        rhs = self.bound_rhs
        return rhs is None or self.bound_lhs <= rhs

    @property
    def guaranteed_size(self) -> Fraction | None:
        """Upper bound on |Y| in terms of |X| alone: |X|·bound / k."""
        if self.bound is None:
            return None
        return len(self.x) * self.bound / self.k
