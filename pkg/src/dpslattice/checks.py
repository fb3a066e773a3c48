"""Distinct pair-sum (dps) verification.

A finite set of lattice points is dps when all N + C(N,2) unordered
pairwise sums, doubles included, are distinct.  Three equivalent checkers
are provided: the pair-sum definition itself, the geometric test (no
three collinear points, no nondegenerate lattice parallelogram), and the
direction test (no two distinct point pairs spanning parallel segments).
Each failure carries an arithmetically re-checkable witness.

All checkers sort and deduplicate their input first, so verdicts and
witnesses never depend on input order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import EmptyInput
from .geometry import (LatticePolytope, Point, Vector, content_gcd, rank,
                       vadd, vneg, vsub)


def _normalize(points) -> list[Point]:
    pts = sorted({tuple(p) for p in points})
    if not pts:
        raise EmptyInput("dps checks need at least one point")
    return pts


# ---------------------------------------------------------------------------
# witnesses


@dataclass(frozen=True)
class PairSumCollision:
    """v_i + v_j = v_k + v_l for distinct index pairs {i,j} != {k,l}."""

    kind = "pairsum_collision"
    first: tuple[int, int]
    second: tuple[int, int]
    points: tuple[Point, Point, Point, Point]  # (v_i, v_j, v_k, v_l)

    def validate(self) -> bool:
        a, b, c, d = self.points
        return vadd(a, b) == vadd(c, d) and set(self.first) != set(self.second)


@dataclass(frozen=True)
class CollinearTriple:
    kind = "collinear_triple"
    indices: tuple[int, int, int]
    points: tuple[Point, Point, Point]

    def validate(self) -> bool:
        a, b, c = self.points
        return len(set(self.points)) == 3 and rank([vsub(b, a), vsub(c, a)]) <= 1


@dataclass(frozen=True)
class Parallelogram:
    """Four points with a + d = b + c forming a positive-area parallelogram."""

    kind = "parallelogram"
    indices: tuple[int, int, int, int]
    points: tuple[Point, Point, Point, Point]  # (a, b, c, d) with a+d = b+c

    def validate(self) -> bool:
        a, b, c, d = self.points
        return (len(set(self.points)) == 4 and vadd(a, d) == vadd(b, c)
                and rank([vsub(b, a), vsub(c, a)]) == 2)


@dataclass(frozen=True)
class ParallelPair:
    """Two distinct point pairs spanning parallel segments."""

    kind = "parallel_pair"
    first: tuple[int, int]
    second: tuple[int, int]
    points: tuple[Point, Point, Point, Point]  # (v, v', w, w') with v'-v parallel to w'-w

    def validate(self) -> bool:
        v, v2, w, w2 = self.points
        return (rank([vsub(v2, v), vsub(w2, w)]) <= 1
                and {v, v2} != {w, w2} and v != v2 and w != w2)


Witness = PairSumCollision | CollinearTriple | Parallelogram | ParallelPair


@dataclass(frozen=True)
class DpsVerdict:
    is_dps: bool
    witness: Witness | None
    checker: str

    def __bool__(self) -> bool:
        return self.is_dps


# ---------------------------------------------------------------------------
# the three checkers


def check_pairsum(points) -> DpsVerdict:
    """Definition check: hash all unordered pair sums, doubles included.

    The witness is the first collision met when pairs (i, j), i <= j, are
    scanned in lexicographic order over the sorted point list.
    """
    pts = _normalize(points)
    seen: dict[Point, tuple[int, int]] = {}
    for i in range(len(pts)):
        for j in range(i, len(pts)):
            total = vadd(pts[i], pts[j])
            if total in seen:
                k, l = seen[total]
                witness = PairSumCollision((k, l), (i, j),
                                           (pts[k], pts[l], pts[i], pts[j]))
                return DpsVerdict(False, witness, "pairsum")
            seen[total] = (i, j)
    return DpsVerdict(True, None, "pairsum")


def check_geometric(points) -> DpsVerdict:
    """No three collinear points and no nondegenerate parallelogram.

    Exhaustive over triples and quadruples.  A degenerate (collinear)
    parallelogram always contains a collinear triple, so scanning triples
    first keeps the two failure kinds disjoint.
    """
    pts = _normalize(points)
    for i, j, k in itertools.combinations(range(len(pts)), 3):
        if rank([vsub(pts[j], pts[i]), vsub(pts[k], pts[i])]) <= 1:
            return DpsVerdict(False, CollinearTriple((i, j, k), (pts[i], pts[j], pts[k])),
                              "geometric")
    for quad in itertools.combinations(range(len(pts)), 4):
        # three ways to pair the quadruple into diagonals
        for (p1, p2), (q1, q2) in (((0, 3), (1, 2)), ((0, 2), (1, 3)), ((0, 1), (2, 3))):
            pp = (pts[quad[p1]], pts[quad[q1]], pts[quad[q2]], pts[quad[p2]])
            if (vadd(pp[0], pp[3]) == vadd(pp[1], pp[2])
                    and rank([vsub(pp[1], pp[0]), vsub(pp[2], pp[0])]) == 2):
                return DpsVerdict(False, Parallelogram(quad, pp), "geometric")
    return DpsVerdict(True, None, "geometric")


def primitive_direction(d: Vector) -> Vector:
    """Canonical representative of the line direction of a nonzero vector."""
    g = content_gcd(d)
    prim = tuple(a // g for a in d)
    for a in prim:
        if a < 0:
            return vneg(prim)
        if a > 0:
            break
    return prim


def check_direction(points) -> DpsVerdict:
    """No two distinct unordered point pairs span parallel segments.

    Segments are parallel exactly when their primitive directions agree up
    to sign, which avoids any division beyond exact gcd reduction.
    """
    pts = _normalize(points)
    dirs: dict[Vector, tuple[int, int]] = {}
    for i, j in itertools.combinations(range(len(pts)), 2):
        key = primitive_direction(vsub(pts[j], pts[i]))
        if key in dirs:
            k, l = dirs[key]
            witness = ParallelPair((k, l), (i, j), (pts[k], pts[l], pts[i], pts[j]))
            return DpsVerdict(False, witness, "direction")
        dirs[key] = (i, j)
    return DpsVerdict(True, None, "direction")


# ---------------------------------------------------------------------------
# difference sets, parity classes, maximality


@dataclass(frozen=True)
class DifferenceSet:
    """All nonzero differences of distinct points; closed under negation."""

    dim: int
    elements: tuple[Vector, ...]

    def __post_init__(self):
        if any(not any(e) for e in self.elements):
            raise ValueError("difference set must not contain the zero vector")
        present = frozenset(self.elements)
        if any(vneg(e) not in present for e in self.elements):
            raise ValueError("difference set must be closed under negation")
        object.__setattr__(self, "_members", present)

    def __contains__(self, v) -> bool:
        return tuple(v) in self._members

    def __len__(self) -> int:
        return len(self.elements)


def difference_set(points) -> DifferenceSet:
    pts = _normalize(points)
    diffs = {vsub(p, q) for p, q in itertools.permutations(pts, 2)}
    return DifferenceSet(len(pts[0]), tuple(sorted(diffs)))


def parity(p: Point) -> Vector:
    return tuple(c & 1 for c in p)


def mod2_classes(points) -> dict[Vector, tuple[Point, ...]]:
    """Partition points by their coordinate parity vector."""
    classes: dict[Vector, list[Point]] = {}
    for p in _normalize(points):
        classes.setdefault(parity(p), []).append(p)
    return {cls: tuple(members) for cls, members in sorted(classes.items())}


def forced_integer_midpoint(points):
    """For more than 2^dim points, two share a parity class; return them.

    Returns ((a, b), midpoint) with a < b component-wise congruent mod 2,
    so the midpoint is a lattice point interior to the segment, or None if
    all parity classes are distinct.
    """
    seen: dict[Vector, Point] = {}
    for p in _normalize(points):
        cls = parity(p)
        if cls in seen:
            a = seen[cls]
            mid = tuple((x + y) // 2 for x, y in zip(a, p))
            return (a, p), mid
        seen[cls] = p
    return None


def is_dps_polytope(polytope: LatticePolytope) -> bool:
    return check_pairsum(polytope.lattice_points).is_dps


def is_maximal_dps(polytope: LatticePolytope) -> bool:
    """dps with the largest possible number of lattice points, 2^dim."""
    pts = polytope.lattice_points
    return len(pts) == 2 ** polytope.dim and check_pairsum(pts).is_dps
