"""
Invariant systems of representatives built from orbit admission.

Given a system ``X`` and an orbit partition, every orbit ``C`` with
``|C ∩ X| · bound >= |C| · k`` is admitted and ``Y`` is the union of the
admitted orbits. ``bound`` is the largest member size for k-multiple
representatives and the largest total weight for weighted ones. All
comparisons are exact.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from fractions import Fraction

from fairreps.covers.models import FamilyOfSets
from fairreps.groups.models import OrbitPartition
from fairreps.symmetrize.checks import WEIGHTED
from fairreps.symmetrize.checks import check_representatives
from fairreps.symmetrize.models import LedgerEntry
from fairreps.symmetrize.models import SymmetrizationReport
from fairreps.symmetrize.models import WeightedFamily
from fairreps.utils.exceptions.errors import InvalidInputError
from fairreps.utils.exceptions.errors import NotRepresentativeError
from fairreps.utils.exceptions.errors import PipelineDefect

logger = logging.getLogger(__name__)


def orbit_ledger(
    partition: OrbitPartition,
    x: frozenset[int],
    bound: Fraction,
    k: int,
    scale: int = 1,
) -> tuple[LedgerEntry, ...]:
    """
    Admission decision for every class, in class-id order.

    ``scale`` multiplies every orbit size and intersection, which is how the
    product construction lifts orbits ``C`` to ``C × E`` without building them.
    """
    entries = []
    for cid, cls in enumerate(partition.classes):
        size = len(cls) * scale
        hits = sum(1 for e in cls if e in x) * scale
        entries.append(LedgerEntry(cid, size, hits, hits * bound >= size * k))
    return tuple(entries)


def admitted_union(partition: OrbitPartition, ledger: Iterable[LedgerEntry]) -> frozenset[int]:
    return partition.union_of(entry.orbit for entry in ledger if entry.admitted)


def _validate(
    fam: FamilyOfSets | WeightedFamily,
    x: frozenset[int],
    k: int | str,
) -> None:
    if violations := check_representatives(fam, x, k):
        logger.warning("input set misses %d of %d family members", len(violations), len(fam))
        raise NotRepresentativeError(violations)


def _confirm(report: SymmetrizationReport, fam: FamilyOfSets | WeightedFamily, k: int | str) -> SymmetrizationReport:
    if not report.bound_holds:
        msg = f"bound violated: {report.bound_lhs} > {report.bound_rhs}"
        raise PipelineDefect(msg)
    if violations := check_representatives(fam, report.y, k):
        msg = (
            f"symmetrized set misses {len(violations)} family members; "
            "the family is probably not invariant under the group"
        )
        raise PipelineDefect(msg, violations=violations)
    return report


def symmetrize_multiple(
    fam: FamilyOfSets,
    x: Iterable[int],
    k: int,
    orbits: OrbitPartition,
) -> SymmetrizationReport:
    """Invariant k-multiple system Y with k·|Y| <= |X ∩ Y| · max |F|."""
    xs = frozenset(x)
    if not isinstance(k, int) or k < 1:
        msg = f"multiplicity must be a positive integer, got {k!r}"
        raise InvalidInputError(msg)
    _validate(fam, xs, k)
    partition = orbits.extended(fam.elements | xs)
    if not fam.sets:
        return SymmetrizationReport("multiple", frozenset(), xs, None, k, ())
    m = Fraction(fam.max_size)
    ledger = orbit_ledger(partition, xs, m, k)
    report = SymmetrizationReport("multiple", admitted_union(partition, ledger), xs, m, k, ledger)
    logger.info("multiple symmetrization: |X|=%d, m=%s, k=%d, |Y|=%d", len(xs), m, k, len(report.y))
    return _confirm(report, fam, k)


def symmetrize_weighted(
    fam: WeightedFamily,
    x: Iterable[int],
    orbits: OrbitPartition,
) -> SymmetrizationReport:
    """Invariant weighted system Y with |Y| <= |X ∩ Y| · max sum F."""
    xs = frozenset(x)
    normalized = fam.normalized()
    _validate(normalized, xs, WEIGHTED)
    partition = orbits.extended(normalized.elements | xs)
    total = normalized.max_total
    if total is None:
        return SymmetrizationReport("weighted", frozenset(), xs, None, 1, ())
    ledger = orbit_ledger(partition, xs, total, 1)
    report = SymmetrizationReport("weighted", admitted_union(partition, ledger), xs, total, 1, ledger)
    logger.info("weighted symmetrization: |X|=%d, M=%s, |Y|=%d", len(xs), total, len(report.y))
    return _confirm(report, normalized, WEIGHTED)
