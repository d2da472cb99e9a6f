"""
Exact minimum (weighted) hitting sets by branch and bound.

Both public solvers reduce to one weighted core: the plain problem gives every
element weight one, the orbit-restricted problem turns each family member
into the set of orbit classes it meets and weighs a class by its size. The
core first finds the optimum value, then fixes the lexicographically
smallest optimal witness one element at a time.
"""

from __future__ import annotations

from typing import TypeAlias

import logging
from collections.abc import Mapping
from collections.abc import Sequence

from fairreps.covers.models import FamilyOfSets
from fairreps.covers.models import HittingResult
from fairreps.groups.models import OrbitPartition
from fairreps.utils.exceptions.errors import InfeasibleError

logger = logging.getLogger(__name__)

Sets: TypeAlias = Sequence[frozenset[int]]


def _reduce(sets: Sets) -> list[frozenset[int]]:
    """Drop duplicates and supersets: hitting the minimal members hits all."""
    unique = sorted(set(sets), key=lambda s: (len(s), sorted(s)))
    kept: list[frozenset[int]] = []
    for s in unique:
        if not any(k <= s for k in kept):
            kept.append(s)
    return kept


class _BranchAndBound:
    def __init__(self, weights: Mapping[int, int]) -> None:
        self.weights = weights
        self.nodes = 0

    def lower_bound(self, sets: Sets) -> int:
        """Pairwise disjoint members each need their own cheapest element."""
        bound = 0
        taken: set[int] = set()
        for s in sorted(sets, key=len):
            if taken.isdisjoint(s):
                taken |= s
                bound += min(self.weights[e] for e in s)
        return bound

    def greedy(self, sets: Sets) -> tuple[int, frozenset[int]]:
        remaining = list(sets)
        chosen: set[int] = set()
        cost = 0
        while remaining:
            counts: dict[int, int] = {}
            for s in remaining:
                for e in s:
                    counts[e] = counts.get(e, 0) + 1
            e = min(counts, key=lambda x: (self.weights[x] / counts[x], x))
            chosen.add(e)
            cost += self.weights[e]
            remaining = [s for s in remaining if e not in s]
        return cost, frozenset(chosen)

    def minimum(self, sets: Sets, budget: int | None = None) -> tuple[int, frozenset[int]] | None:
        """
        Cheapest hitting set of ``sets``, or None if every one costs more than ``budget``.

        Every member must be nonempty.
        """
        sets = _reduce(sets)
        if not sets:
            return 0, frozenset()
        best_cost, best = self.greedy(sets)
        if budget is not None and best_cost > budget:
            best_cost, best = budget + 1, frozenset()
        state = {"cost": best_cost, "set": best}

        def branch(remaining: list[frozenset[int]], chosen: frozenset[int], cost: int) -> None:
            self.nodes += 1
            if not remaining:
                if cost < state["cost"]:
                    state["cost"], state["set"] = cost, chosen
                return
            if cost + self.lower_bound(remaining) >= state["cost"]:
                return
            pivot = min(remaining, key=lambda s: (len(s), sorted(s)))
            excluded: set[int] = set()
            for e in sorted(pivot, key=lambda x: (self.weights[x], x)):
                rest = []
                feasible = True
                for s in remaining:
                    if e in s:
                        continue
                    trimmed = s - excluded
                    if not trimmed:
                        feasible = False
                        break
                    rest.append(trimmed)
                if feasible:
                    branch(rest, chosen | {e}, cost + self.weights[e])
                excluded.add(e)

        branch(sets, frozenset(), 0)
        if budget is not None and state["cost"] > budget:
            return None
        return state["cost"], state["set"]  # type: ignore[return-value]


def _lexicographic_optimum(sets: Sets, weights: Mapping[int, int]) -> tuple[int, tuple[int, ...]]:
    solver = _BranchAndBound(weights)
    optimum = solver.minimum(sets)
    assert optimum is not None
    value = optimum[0]

    chosen: list[int] = []
    spent = 0
    remaining = list(sets)
    candidates = sorted(set().union(*sets)) if sets else []
    while remaining:
        for e in candidates:
            if chosen and e <= chosen[-1]:
                continue
            if spent + weights[e] > value:
                continue
            rest = [s for s in remaining if e not in s]
            # The rest must be hit by elements larger than e.
            allowed = [frozenset(x for x in s if x > e) for s in rest]
            if any(not s for s in allowed):
                continue
            if solver.minimum(allowed, budget=value - spent - weights[e]) is None:
                continue
            chosen.append(e)
            spent += weights[e]
            remaining = rest
            break
        else:  # pragma: no cover - the optimum above guarantees a continuation
            msg = "lexicographic reconstruction lost the optimum"
            raise AssertionError(msg)
    assert spent == value
    logger.debug("branch and bound explored %d nodes (optimum %d)", solver.nodes, value)
    return value, tuple(chosen)


def min_hitting_set(fam: FamilyOfSets) -> HittingResult:
    """Minimum-cardinality hitting set; the witness is the lexicographically smallest optimum."""
    fam.require_nonempty_members()
    elements = fam.elements
    value, witness = _lexicographic_optimum(fam.sets, dict.fromkeys(elements, 1))
    result = HittingResult(value, frozenset(witness))
    assert all(not s.isdisjoint(result.witness) for s in fam.sets)
    assert len(result.witness) == value
    return result


def min_orbit_hitting_set(fam: FamilyOfSets, orbits: OrbitPartition) -> HittingResult:
    """
    Minimum-size invariant hitting set: a union of orbit classes.

    The value is the number of elements in the union; ``witness_orbits`` is
    the lexicographically smallest optimal list of class ids.
    """
    fam.require_nonempty_members()
    partition = orbits
    if uncovered := fam.elements - partition.ground:
        logger.warning("%d family elements lie in no orbit class and cannot be chosen", len(uncovered))
    class_sets = []
    for i, s in enumerate(fam.sets):
        ids = frozenset(partition.class_of(e) for e in s if e in partition.index)
        if not ids:
            msg = f"family member {i} meets no orbit class"
            raise InfeasibleError(msg, members=[i])
        class_sets.append(ids)
    used = frozenset().union(*class_sets) if class_sets else frozenset()
    weights = {cid: len(partition.classes[cid]) for cid in used}
    value, chosen = _lexicographic_optimum(class_sets, weights)
    witness = partition.union_of(chosen)
    result = HittingResult(value, witness, tuple(chosen))
    assert all(not s.isdisjoint(witness) for s in fam.sets)
    assert len(witness) == value
    return result
