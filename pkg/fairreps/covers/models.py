from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from fairreps.utils.exceptions.errors import InfeasibleError


@dataclass(frozen=True)
class FamilyOfSets:
    """A finite list of finite sets of integer element ids."""

    sets: tuple[frozenset[int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "sets", tuple(frozenset(s) for s in self.sets))

    @classmethod
    def of(cls, sets: Iterable[Iterable[int]]) -> FamilyOfSets:
        return cls(tuple(frozenset(s) for s in sets))

    def __len__(self) -> int:
        return len(self.sets)

    @property
    def elements(self) -> frozenset[int]:
        return frozenset().union(*self.sets)

    @property
    def max_size(self) -> int:
        return max((len(s) for s in self.sets), default=0)

    def require_nonempty_members(self) -> None:
        if empty := [i for i, s in enumerate(self.sets) if not s]:
            msg = f"family members {empty} are empty"
            raise InfeasibleError(msg, members=empty)


@dataclass(frozen=True)
class HittingResult:
    """
    An optimum of a hitting-set problem.

    ``witness`` holds element ids. For the orbit-restricted problem
    ``witness_orbits`` holds the chosen class ids and ``witness`` their union.
    """

    value: int
    witness: frozenset[int]
    witness_orbits: tuple[int, ...] | None = None
