from fractions import Fraction

import pytest
from factory.random import randgen

from fairreps.covers.models import FamilyOfSets
from fairreps.groups.models import OrbitPartition
from fairreps.groups.models import PermGroup
from fairreps.symmetrize.checks import WEIGHTED
from fairreps.symmetrize.checks import check_representatives
from fairreps.symmetrize.models import WeightedFamily
from fairreps.symmetrize.models import WeightFunction
from fairreps.symmetrize.tests.factories import MultipleInstanceFactory
from fairreps.symmetrize.tests.factories import WeightedInstanceFactory
from fairreps.symmetrize.theorems import orbit_ledger
from fairreps.symmetrize.theorems import symmetrize_multiple
from fairreps.symmetrize.theorems import symmetrize_weighted
from fairreps.utils.exceptions.errors import InvalidInputError
from fairreps.utils.exceptions.errors import NotRepresentativeError
from fairreps.utils.exceptions.errors import PipelineDefect

THIRD = Fraction(1, 3)


def star(center: int, leaves: range) -> WeightFunction:
    return WeightFunction({center: Fraction(1), **dict.fromkeys(leaves, THIRD)})


class TestSymmetrizeMultiple:
    def test_trivial_group_returns_x(self):
        for instance in MultipleInstanceFactory.build_batch(50, group=PermGroup.trivial(7)):
            report = symmetrize_multiple(instance.family, instance.x, instance.k, instance.orbits)
            assert report.y == instance.x

    def test_two_disjoint_triangles(self):
        fam = FamilyOfSets.of([{0, 1, 2}, {3, 4, 5}])
        report = symmetrize_multiple(fam, {0, 3}, 1, OrbitPartition((tuple(range(6)),)))
        assert report.y == frozenset(range(6))
        assert report.bound == 3
        assert report.bound_lhs == report.bound_rhs == 6
        assert [(e.size, e.hits, e.admitted) for e in report.ledger] == [(6, 2, True)]

    def test_hundred_element_sets_with_k_two(self):
        fam = FamilyOfSets.of([range(0, 100), range(100, 200), range(50, 150)])
        x = {0, 1, 100, 101, 50, 51}
        report = symmetrize_multiple(fam, x, 2, OrbitPartition.singletons(range(200)))
        assert report.bound == 100
        assert report.guaranteed_size == 50 * len(x)

    def test_empty_family(self):
        report = symmetrize_multiple(FamilyOfSets(), {1, 2}, 1, OrbitPartition.singletons(range(3)))
        assert report.y == frozenset()
        assert report.bound is None
        assert report.bound_holds

    def test_invalid_x_lists_the_violations(self):
        fam = FamilyOfSets.of([{0, 1, 2}, {3, 4, 5}])
        with pytest.raises(NotRepresentativeError) as exc:
            symmetrize_multiple(fam, {0}, 1, OrbitPartition.singletons(range(6)))
        assert [v.index for v in exc.value.violations] == [1]

    @pytest.mark.parametrize("k", [0, -1])
    def test_multiplicity_must_be_positive(self, k: int):
        with pytest.raises(InvalidInputError):
            symmetrize_multiple(FamilyOfSets.of([{0}]), {0}, k, OrbitPartition.singletons([0]))

    def test_non_invariant_family_is_a_defect(self):
        with pytest.raises(PipelineDefect):
            symmetrize_multiple(FamilyOfSets.of([{0}]), {0}, 1, OrbitPartition(((0, 1),)))

    def test_points_outside_the_partition_are_fixed(self):
        report = symmetrize_multiple(FamilyOfSets.of([{7}]), {7}, 1, OrbitPartition(((0, 1),)))
        assert report.y == frozenset({7})


class TestSymmetrizeWeighted:
    def test_star_constant(self):
        fam = WeightedFamily((star(0, range(1, 10)),))
        report = symmetrize_weighted(fam, {0}, OrbitPartition.singletons(range(10)))
        assert report.bound == 4
        assert report.y == frozenset({0})

    def test_forty_stars_give_one_hundred_sixty(self):
        fam = WeightedFamily(tuple(star(10 * i, range(10 * i + 1, 10 * i + 10)) for i in range(40)))
        centers = {10 * i for i in range(40)}
        report = symmetrize_weighted(fam, centers, OrbitPartition.singletons(range(400)))
        assert report.y == centers
        assert report.guaranteed_size == 160

    def test_two_swapped_stars(self):
        fam = WeightedFamily((star(0, range(1, 10)), star(10, range(11, 20))))
        swap = OrbitPartition(tuple((i, i + 10) for i in range(10)))
        report = symmetrize_weighted(fam, {0, 10}, swap)
        assert report.y == frozenset({0, 10})
        assert [e.admitted for e in report.ledger] == [True] + [False] * 9

    def test_trivial_group_returns_x(self):
        for instance in WeightedInstanceFactory.build_batch(50, group=PermGroup.trivial(7)):
            assert symmetrize_weighted(instance.family, instance.x, instance.orbits).y == instance.x

    def test_weights_above_one_are_clamped(self):
        report = symmetrize_weighted(WeightedFamily((WeightFunction({0: Fraction(2)}),)), {0}, OrbitPartition(((0,),)))
        assert report.bound == 1

    def test_negative_weights_are_rejected(self):
        with pytest.raises(InvalidInputError):
            WeightFunction({0: Fraction(-1, 2)})

    def test_invalid_x(self):
        with pytest.raises(NotRepresentativeError) as exc:
            symmetrize_weighted(WeightedFamily((star(0, range(1, 10)),)), {1, 2}, OrbitPartition.singletons(range(10)))
        assert exc.value.violations[0].achieved == Fraction(2, 3)

    def test_empty_family(self):
        report = symmetrize_weighted(WeightedFamily(), set(), OrbitPartition.singletons(range(2)))
        assert (report.y, report.bound) == (frozenset(), None)


@pytest.mark.corpus
@pytest.mark.parametrize("batch", range(10))
def test_multiple_soundness(batch: int):
    for instance in MultipleInstanceFactory.build_batch(100):
        report = symmetrize_multiple(instance.family, instance.x, instance.k, instance.orbits)
        m = instance.family.max_size
        assert instance.orbits.is_union_of_classes(report.y)
        assert check_representatives(instance.family, report.y, instance.k) == []
        assert instance.k * len(report.y) <= len(instance.x & report.y) * m <= len(instance.x) * m


@pytest.mark.corpus
@pytest.mark.parametrize("batch", range(10))
def test_weighted_soundness(batch: int):
    for instance in WeightedInstanceFactory.build_batch(100):
        report = symmetrize_weighted(instance.family, instance.x, instance.orbits)
        big_m = instance.family.normalized().max_total
        assert instance.orbits.is_union_of_classes(report.y)
        assert check_representatives(instance.family.normalized(), report.y, WEIGHTED) == []
        assert len(report.y) <= len(instance.x & report.y) * big_m <= len(instance.x) * big_m


def test_enlarging_x_never_removes_an_orbit():
    for instance in MultipleInstanceFactory.build_batch(100):
        smaller = symmetrize_multiple(instance.family, instance.x, instance.k, instance.orbits)
        extra = {e for e in range(instance.group.n) if randgen.random() < 0.3}
        larger = symmetrize_multiple(instance.family, instance.x | extra, instance.k, instance.orbits)
        assert smaller.y <= larger.y


def test_admission_ignores_summation_order():
    for instance in WeightedInstanceFactory.build_batch(50):
        normalized = instance.family.normalized()
        totals = []
        for f in normalized.functions:
            weights = list(f.support.values())
            randgen.shuffle(weights)
            totals.append(sum(weights, Fraction(0)))
        partition = instance.orbits
        expected = orbit_ledger(partition, instance.x, normalized.max_total, 1)
        assert orbit_ledger(partition, instance.x, max(totals), 1) == expected
        assert symmetrize_weighted(instance.family, instance.x, partition).ledger == expected
