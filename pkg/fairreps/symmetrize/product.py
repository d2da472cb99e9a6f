"""
The product construction for weighted representatives.

Weights are modelled by an auxiliary set E with ``|E| · w`` integral for
every weight ``w``. A weight function F becomes every subset of ``U × E``
holding ``F(u)·|E|`` points over each ``u``; ``X × E`` is then an
``|E|``-multiple system for the lifted family and the multiple-representative
admission runs on the lifted orbits ``C × E``. Nothing over ``U × E`` is
materialised: the lifted counts are products with ``|E|``.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from fractions import Fraction

from fairreps.conf import settings
from fairreps.groups.models import OrbitPartition
from fairreps.symmetrize.checks import WEIGHTED
from fairreps.symmetrize.checks import check_representatives
from fairreps.symmetrize.models import LedgerEntry
from fairreps.symmetrize.models import SymmetrizationReport
from fairreps.symmetrize.models import Violation
from fairreps.symmetrize.models import WeightedFamily
from fairreps.symmetrize.theorems import admitted_union
from fairreps.symmetrize.theorems import orbit_ledger
from fairreps.utils.exceptions.errors import CapExceededError
from fairreps.utils.exceptions.errors import NotRepresentativeError
from fairreps.utils.exceptions.errors import PipelineDefect
from fairreps.utils.rationals import common_denominator

logger = logging.getLogger(__name__)


def auxiliary_size(fam: WeightedFamily) -> int:
    """Smallest |E| making every (normalized) weight times |E| an integer."""
    size = common_denominator(fam.normalized().weight_set)
    if size > settings.LCM_CAP:
        msg = f"auxiliary set would need {size} points (cap {settings.LCM_CAP})"
        raise CapExceededError(msg, cap=settings.LCM_CAP)
    return size


def _lifted_sizes(fam: WeightedFamily, modulus: int) -> list[int]:
    sizes = []
    for f in fam.functions:
        lifted = f.total * modulus
        assert lifted.denominator == 1
        sizes.append(int(lifted))
    return sizes


def _lifted_hits(fam: WeightedFamily, x: frozenset[int], modulus: int) -> list[int]:
    """|(X × E) ∩ F~| for any lift F~ of each F: the points of F~ over X."""
    hits = []
    for f in fam.functions:
        lifted = f.weight_of(x) * modulus
        assert lifted.denominator == 1
        hits.append(int(lifted))
    return hits


def product_oracle(
    fam: WeightedFamily,
    x: Iterable[int],
    orbits: OrbitPartition,
) -> SymmetrizationReport:
    """
    Weighted symmetrization through the lifted multiple-representative problem.

    Equivalent to ``symmetrize_multiple`` on the lifted family over ``U × E``
    with ``k = |E|``: each lifted set of F has ``F(U)·|E|`` points, the lifted
    orbits are ``C × E`` and they meet ``X × E`` in ``|C ∩ X|·|E|`` points, so
    ``orbit_ledger`` with ``scale=|E|`` takes the admission decisions the
    materialised family would. The ledger is projected back to U.
    """
    xs = frozenset(x)
    normalized = fam.normalized()
    modulus = auxiliary_size(normalized)

    # X × E must be an |E|-multiple system for the lifted family.
    hits = _lifted_hits(normalized, xs, modulus)
    if violations := [
        Violation(i, Fraction(h, modulus), Fraction(1)) for i, h in enumerate(hits) if h < modulus
    ]:
        raise NotRepresentativeError(violations)

    partition = orbits.extended(normalized.elements | xs)
    if not normalized.functions:
        return SymmetrizationReport("product", frozenset(), xs, None, 1, (), auxiliary_size=modulus)

    lifted_max = max(_lifted_sizes(normalized, modulus))
    lifted = orbit_ledger(partition, xs, Fraction(lifted_max), modulus, scale=modulus)
    lifted_y = sum(e.size for e in lifted if e.admitted)
    lifted_xy = sum(e.hits for e in lifted if e.admitted)
    if modulus * lifted_y > lifted_xy * lifted_max:
        msg = "lifted bound violated"
        raise PipelineDefect(msg)

    projected = tuple(
        LedgerEntry(e.orbit, e.size // modulus, e.hits // modulus, e.admitted) for e in lifted
    )
    report = SymmetrizationReport(
        "product",
        admitted_union(partition, lifted),
        xs,
        Fraction(lifted_max, modulus),
        1,
        projected,
        auxiliary_size=modulus,
    )
    logger.info("product construction with |E|=%d: |Y|=%d", modulus, len(report.y))
    if not report.bound_holds:
        msg = "projected bound violated"
        raise PipelineDefect(msg)
    if check_representatives(normalized, report.y, WEIGHTED):
        msg = "projected set is not a weighted system; is the family invariant?"
        raise PipelineDefect(msg)
    return report
