import itertools
import random

import pytest

from dpslattice import (EmptyInput, LatticePolytope, check_direction,
                        check_geometric, check_pairsum, content_gcd,
                        difference_set, forced_integer_midpoint, golden,
                        is_maximal_dps, mod2_classes)
from dpslattice.checks import (CollinearTriple, Parallelogram, ParallelPair,
                               PairSumCollision, primitive_direction)
from dpslattice.geometry import vadd, vsub

from conftest import random_lattice_point_set, random_point_set, random_unimodular_map

ALL_CHECKERS = (check_pairsum, check_geometric, check_direction)

UNIT_SQUARE = ((0, 0), (0, 1), (1, 0), (1, 1))


class TestPairSum:
    def test_triangle_is_dps(self):
        assert check_pairsum(golden.TRIANGLE_LATTICE).is_dps

    def test_triangle_sum_set_matches(self):
        pts = golden.TRIANGLE_LATTICE
        sums = {vadd(a, b) for a, b in itertools.combinations_with_replacement(pts, 2)}
        assert sums == set(golden.TRIANGLE_PAIR_SUMS)
        assert len(sums) == len(pts) + len(pts) * (len(pts) - 1) // 2

    def test_unit_square_collision(self):
        verdict = check_pairsum(UNIT_SQUARE)
        assert not verdict.is_dps
        w = verdict.witness
        assert isinstance(w, PairSumCollision) and w.validate()
        assert w.points == ((0, 0), (1, 1), (0, 1), (1, 0))

    def test_midpoint_collision(self):
        verdict = check_pairsum([(0,), (1,), (2,)])
        w = verdict.witness
        assert isinstance(w, PairSumCollision) and w.validate()
        assert w.points == ((0,), (2,), (1,), (1,))

    def test_input_order_irrelevant(self, rng):
        pts = list(UNIT_SQUARE)
        baseline = check_pairsum(pts)
        for _ in range(5):
            rng.shuffle(pts)
            again = check_pairsum(pts)
            assert again.witness == baseline.witness

    def test_empty_rejected(self):
        with pytest.raises(EmptyInput):
            check_pairsum([])


class TestGeometric:
    def test_triangle_is_dps(self):
        assert check_geometric(golden.TRIANGLE_LATTICE).is_dps

    def test_parallelogram(self):
        verdict = check_geometric(UNIT_SQUARE)
        assert not verdict.is_dps
        assert isinstance(verdict.witness, Parallelogram)
        assert verdict.witness.validate()

    def test_collinear(self):
        verdict = check_geometric([(0, 1), (1, 1), (2, 1)])
        assert not verdict.is_dps
        assert isinstance(verdict.witness, CollinearTriple)
        assert verdict.witness.validate()

    def test_sidon_set_is_not_hull_complete(self):
        # {0,1,3} has distinct pair sums but is collinear: the checkers are
        # only equivalent on full lattice-point sets of polytopes
        assert check_pairsum([(0,), (1,), (3,)]).is_dps
        assert not check_geometric([(0,), (1,), (3,)]).is_dps


class TestDirection:
    def test_triangle_is_dps(self):
        assert check_direction(golden.TRIANGLE_LATTICE).is_dps

    def test_parallel_segments(self):
        verdict = check_direction([(0, 0), (1, 0), (0, 1), (5, 1)])
        assert not verdict.is_dps
        w = verdict.witness
        assert isinstance(w, ParallelPair) and w.validate()
        assert w.points == ((0, 0), (1, 0), (0, 1), (5, 1))

    def test_two_points(self):
        assert check_direction([(0, 0), (2, 3)]).is_dps

    def test_single_point_vacuous(self):
        for checker in ALL_CHECKERS:
            assert checker([(7, 7)]).is_dps

    def test_primitive_direction_sign(self):
        assert primitive_direction((0, -2)) == (0, 1)
        assert primitive_direction((-3, 6)) == (1, -2)

    def test_matches_minor_based_parallel_test(self, rng):
        # oracle: two segments are parallel iff all 2x2 minors vanish
        for _ in range(40):
            u = tuple(rng.randint(-4, 4) for _ in range(3))
            w = tuple(rng.randint(-4, 4) for _ in range(3))
            if not any(u) or not any(w):
                continue
            minors_vanish = all(u[i] * w[j] - u[j] * w[i] == 0
                                for i, j in itertools.combinations(range(3), 2))
            assert (primitive_direction(u) == primitive_direction(w)) == minors_vanish


class TestEquivalence:
    def test_golden_corpus(self):
        corpus = [golden.TRIANGLE_LATTICE,
                  golden.octet_4d().lattice_points,
                  golden.octet_3d().lattice_points,
                  golden.lifted_triangle().lattice_points,
                  UNIT_SQUARE,
                  ((0,), (1,), (2,))]
        for pts in corpus:
            verdicts = [c(pts).is_dps for c in ALL_CHECKERS]
            assert len(set(verdicts)) == 1, pts

    def test_random_hull_complete_sets(self, rng):
        for _ in range(120):
            dim = rng.choice((1, 2, 3, 4))
            pts = random_lattice_point_set(rng, dim, 12)
            verdicts = [c(pts).is_dps for c in ALL_CHECKERS]
            assert len(set(verdicts)) == 1, pts


class TestCountBound:
    def test_dps_polytopes_respect_power_bound(self, rng):
        # the bound is about full lattice-point sets: a plain Sidon set such
        # as {-3, 0, 2} in Z can be arbitrarily large
        for _ in range(150):
            dim = rng.choice((1, 2, 3))
            pts = random_lattice_point_set(rng, dim, 40)
            if check_pairsum(pts).is_dps:
                assert len(pts) <= 2 ** dim

    def test_forced_midpoint_beyond_bound(self, rng):
        for dim in (1, 2, 3):
            for _ in range(30):
                pts = random_point_set(rng, dim, 2 ** dim + 1, -4, 4)
                found = forced_integer_midpoint(pts)
                assert found is not None
                (a, b), mid = found
                assert all((x + y) % 2 == 0 for x, y in zip(a, b))
                assert mid == tuple((x + y) // 2 for x, y in zip(a, b))

    def test_midpoint_none_when_classes_distinct(self):
        assert forced_integer_midpoint(golden.TRIANGLE_LATTICE) is None


class TestDifferenceSet:
    def test_triangle_differences(self):
        expected = set()
        for v in ((0, 1), (1, -2), (1, -1), (1, 0), (1, 1), (2, -1)):
            expected.add(v)
            expected.add((-v[0], -v[1]))
        diffs = difference_set(golden.TRIANGLE_LATTICE)
        assert set(diffs.elements) == expected
        assert len(diffs) == 12

    def test_single_point_empty(self):
        assert len(difference_set([(3, 4)])) == 0

    def test_unit_segment(self):
        assert difference_set([(0,), (1,)]).elements == ((-1,), (1,))

    def test_cardinality_and_negation(self, rng):
        for _ in range(20):
            pts = random_point_set(rng, 3, rng.randint(2, 6))
            diffs = difference_set(pts)
            assert len(diffs) % 2 == 0
            assert all(vsub((0,) * 3, e) in diffs for e in diffs.elements)
            n = len(pts)
            if check_pairsum(pts).is_dps:
                # distinct pair sums force all ordered differences distinct
                assert len(diffs) == n * (n - 1)

    def test_primitivity_over_golden_polytopes(self):
        for poly in (golden.triangle(), golden.octet_4d(), golden.lifted_triangle()):
            pts = poly.lattice_points
            for a, b in itertools.permutations(pts, 2):
                assert content_gcd(vsub(a, b)) == 1


class TestMod2Classes:
    def test_triangle_hits_four_classes(self):
        classes = mod2_classes(golden.TRIANGLE_LATTICE)
        assert set(classes) == {(0, 0), (0, 1), (1, 0), (1, 1)}
        assert all(len(members) == 1 for members in classes.values())

    def test_shared_class(self):
        classes = mod2_classes([(0, 0), (2, 2)])
        assert classes == {(0, 0): ((0, 0), (2, 2))}


class TestUnimodularInvariance:
    def test_verdicts_stable_under_maps(self, rng):
        samples = [golden.TRIANGLE_LATTICE, UNIT_SQUARE,
                   ((0, 1), (1, 1), (2, 1))]
        for pts in samples:
            for _ in range(25):
                t = random_unimodular_map(rng, 2)
                moved = [t.apply_point(p) for p in pts]
                for checker in ALL_CHECKERS:
                    assert checker(pts).is_dps == checker(moved).is_dps


class TestMaximality:
    def test_triangle(self, triangle):
        assert is_maximal_dps(triangle)

    def test_octet_projection(self):
        assert is_maximal_dps(golden.octet_3d())

    def test_long_segment(self):
        assert not is_maximal_dps(LatticePolytope([(0,), (2,)]))

    def test_square_not_dps(self):
        assert not is_maximal_dps(LatticePolytope(UNIT_SQUARE))
