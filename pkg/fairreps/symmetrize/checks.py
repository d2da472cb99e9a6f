from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from collections.abc import Sequence
from fractions import Fraction

from fairreps.covers.models import FamilyOfSets
from fairreps.groups.models import Permutation
from fairreps.groups.models import PermGroup
from fairreps.symmetrize.models import ONE
from fairreps.symmetrize.models import Violation
from fairreps.symmetrize.models import WeightedFamily
from fairreps.symmetrize.models import WeightFunction
from fairreps.utils.exceptions.errors import InvalidInputError

WEIGHTED = "weighted"


def check_representatives(
    fam: FamilyOfSets | WeightedFamily,
    x: Iterable[int],
    k: int | str = 1,
) -> list[Violation]:
    """
    Members of ``fam`` that ``x`` fails to represent.

    For a set family ``x`` must meet every member in at least ``k`` elements;
    for a weighted family (``k="weighted"``) its total weight under every
    function must reach one. An empty list means ``x`` is valid.
    """
    chosen = frozenset(x)
    if isinstance(fam, WeightedFamily):
        if k != WEIGHTED:
            msg = "weighted families are checked with k='weighted'"
            raise InvalidInputError(msg)
        return [
            Violation(i, total, ONE)
            for i, f in enumerate(fam.functions)
            if (total := f.weight_of(chosen)) < ONE
        ]
    if not isinstance(k, int) or k < 1:
        msg = f"multiplicity must be a positive integer, got {k!r}"
        raise InvalidInputError(msg)
    return [
        Violation(i, Fraction(hits), Fraction(k))
        for i, member in enumerate(fam.sets)
        if (hits := len(member & chosen)) < k
    ]


def _generators(group: PermGroup | Sequence[Permutation]) -> Sequence[Permutation]:
    return group.generators if isinstance(group, PermGroup) else group


def check_family_invariance(
    fam: FamilyOfSets | WeightedFamily,
    group: PermGroup | Sequence[Permutation],
) -> bool:
    """True iff every generator maps every member onto a member."""
    generators = _generators(group)
    if isinstance(fam, WeightedFamily):
        functions = set(fam.functions)
        return all(f.precomposed(g) in functions for g in generators for f in fam.functions)
    members = set(fam.sets)
    return all(frozenset(g(e) for e in s) in members for g in generators for s in fam.sets)


def close_family(
    fam: FamilyOfSets | WeightedFamily,
    group: PermGroup | Sequence[Permutation],
) -> FamilyOfSets | WeightedFamily:
    """The smallest invariant family containing ``fam`` (members in discovery order)."""
    generators = _generators(group)
    if isinstance(fam, WeightedFamily):
        seen_f: dict[WeightFunction, None] = dict.fromkeys(fam.functions)
        queue_f = deque(seen_f)
        while queue_f:
            f = queue_f.popleft()
            for g in generators:
                image = f.precomposed(g)
                if image not in seen_f:
                    seen_f[image] = None
                    queue_f.append(image)
        return WeightedFamily(tuple(seen_f))
    seen: dict[frozenset[int], None] = dict.fromkeys(fam.sets)
    queue = deque(seen)
    while queue:
        s = queue.popleft()
        for g in generators:
            image = frozenset(g(e) for e in s)
            if image not in seen:
                seen[image] = None
                queue.append(image)
    return FamilyOfSets(tuple(seen))
