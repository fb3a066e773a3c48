"""Constructing maximal dps polytopes in every dimension.

The engine is a dimension-raising lift: stack a maximal dps polytope at
height 0 and a carefully sheared unimodular image of it at height 1.  The
shear matrix is chosen from the difference-set radius so that no difference
of the image lands back in the difference set, which is exactly what keeps
the cross-layer pair sums distinct.  Every constructive step re-verifies
its own postcondition instead of trusting the derivation.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import golden
from .checks import (DifferenceSet, check_pairsum, difference_set,
                     is_maximal_dps)
from .errors import DomainError, EmptyInput, NotDps
from .geometry import (LatticePolytope, Point, UnimodularAffineMap, det_int,
                       matvec)


def lift_radius(diffs: DifferenceSet) -> int:
    """Largest absolute coordinate over all difference vectors."""
    if not diffs.elements:
        raise EmptyInput("difference set of a single point has no radius")
    return max(abs(c) for e in diffs.elements for c in e)


def build_lift_matrix(n: int, radius: int) -> tuple[tuple[int, ...], ...]:
    """The unimodular shear used by the lift, for ambient dimension n >= 2.

    Nonzero entries: the diagonal, the superdiagonal, and the first entry
    of the second row.  Row 1 is (1+(R+1)^2, R+1, 0, ...), row 2 starts
    (R+1, 1, R+1, ...), later rows are (..., 1, R+1, ...).
    """
    if n < 2:
        raise DomainError("lift matrix needs dimension at least 2")
    if radius < 0:
        raise DomainError("radius must be non-negative")
    r1 = radius + 1
    rows = [[0] * n for _ in range(n)]
    rows[0][0] = 1 + r1 * r1
    rows[0][1] = r1
    rows[1][0] = r1
    rows[1][1] = 1
    if n >= 3:
        rows[1][2] = r1
    for k in range(2, n):
        rows[k][k] = 1
        if k + 1 < n:
            rows[k][k + 1] = r1
    matrix = tuple(tuple(row) for row in rows)
    if det_int(matrix) not in (1, -1):
        raise AssertionError("lift matrix construction lost unimodularity")
    return matrix


def verify_separation(matrix, diffs: DifferenceSet, *, radius: int | None = None):
    """Check that the matrix maps every difference vector out of the set.

    Returns (True, None) or (False, (u, image)) with the offending vector.
    When the difference-set radius is supplied, additionally require the
    stronger margin max |image coordinate| > radius, which is what the
    matrix built by build_lift_matrix guarantees.
    """
    for u in diffs.elements:
        w = matvec(matrix, u)
        if w in diffs:
            return False, (u, w)
        if radius is not None and max(abs(c) for c in w) <= radius:
            return False, (u, w)
    return True, None


@dataclass(frozen=True)
class LiftCertificate:
    """Audit record of one lift step, with the re-verified result."""

    source_dim: int
    radius: int
    matrix: tuple[tuple[int, ...], ...]
    separation_checked: bool
    polytope: LatticePolytope

    @property
    def low_layer(self) -> tuple[Point, ...]:
        return tuple(p for p in self.polytope.lattice_points if p[-1] == 0)

    @property
    def high_layer(self) -> tuple[Point, ...]:
        return tuple(p for p in self.polytope.lattice_points if p[-1] == 1)


def lift(polytope: LatticePolytope) -> LiftCertificate:
    """Raise a maximal dps polytope one dimension, doubling its point count."""
    if polytope.dim < 2:
        raise DomainError("lifting is defined for dimension >= 2; "
                          "dimension 1 is covered by the fixed base cases")
    pts = polytope.lattice_points
    if not is_maximal_dps(polytope):
        raise NotDps("lift input must be maximal dps")
    diffs = difference_set(pts)
    radius = lift_radius(diffs)
    matrix = build_lift_matrix(polytope.dim, radius)
    ok, counterexample = verify_separation(matrix, diffs, radius=radius)
    if not ok:
        raise AssertionError(f"separation check failed on {counterexample}; "
                             "this indicates a construction bug")
    low = [p + (0,) for p in pts]
    high = [matvec(matrix, p) + (1,) for p in pts]
    points = low + high
    verdict = check_pairsum(points)
    if not verdict.is_dps:
        raise AssertionError(f"lifted point set failed the pair-sum check: {verdict.witness}")
    # The lattice points of the lift are exactly the two layers: every hull
    # point has last coordinate in [0, 1], so lattice points sit in the
    # slices at 0 and 1; the slice at height h is the hull of that layer
    # alone (convex weights on the other layer must vanish), the low layer
    # is the verified source lattice-point set, and the high layer is its
    # image under a lattice-preserving map.  Small-dimension tests cross
    # check this against a fresh bounding-box enumeration.
    result = LatticePolytope(points, _lattice_points=points)
    return LiftCertificate(polytope.dim, radius, matrix, True, result)


def maximal_dps_with_certificate(n: int, *, base3: str = "paper"):
    """A maximal dps polytope in dimension n plus the final lift certificate.

    Fixed bases: the unit segment (n = 1), the golden triangle (n = 2) and
    the projected 8-point polytope (n = 3); higher dimensions lift the
    previous one.  base3="lift" instead lifts the triangle for n = 3, as a
    cross-validation of the two constructions.  The certificate is None
    when no lift was involved.
    """
    if n < 1:
        raise DomainError("dimension must be at least 1")
    if base3 not in ("paper", "lift"):
        raise DomainError(f"unknown base3 choice {base3!r}")
    certificate = None
    if n == 1:
        result = LatticePolytope([(0,), (1,)])
    elif n == 2:
        result = golden.triangle()
    elif n == 3 and base3 == "paper":
        result = golden.octet_3d()
    else:
        certificate = lift(maximal_dps(n - 1, base3=base3))
        result = certificate.polytope
    if not is_maximal_dps(result):
        raise AssertionError(f"constructed polytope for n={n} failed verification")
    return result, certificate


def maximal_dps(n: int, *, base3: str = "paper") -> LatticePolytope:
    """A maximal dps polytope in dimension n, verified before returning."""
    return maximal_dps_with_certificate(n, base3=base3)[0]


def _to_orthant(points):
    """Translate a point list so each coordinate minimum is 0."""
    n = len(points[0])
    mins = [min(p[i] for p in points) for i in range(n)]
    shift = UnimodularAffineMap(UnimodularAffineMap.identity(n).matrix,
                                tuple(-m for m in mins))
    return sorted(shift.apply_point(p) for p in points), shift


def reduce_coordinates(polytope: LatticePolytope):
    """Greedy unimodular shearing to shrink the size of a polytope.

    Tries elementary shears x_i += c * x_j with |c| bounded by the current
    size, keeping the strict improvement that minimizes (size, point list);
    ties break lexicographically, so the result is deterministic.  Returns
    (reduced polytope, map) where the map sends the input to the output
    exactly.  The result never exceeds the size of the orthant translate,
    and the dps verdict is preserved (asserted, since the map is affinely
    unimodular).
    """
    original = tuple(polytope.lattice_points)
    before = check_pairsum(original).is_dps
    n = polytope.dim
    current, total_map = _to_orthant(list(original))
    current_size = max(sum(p) for p in current)
    while True:
        best = None
        bound = max(current_size, 1)
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                for c in range(-bound, bound + 1):
                    if c == 0:
                        continue
                    shear = UnimodularAffineMap.shear(n, i, j, c)
                    moved = [shear.apply_point(p) for p in current]
                    moved, shift = _to_orthant(moved)
                    moved_size = max(sum(p) for p in moved)
                    if moved_size >= current_size:
                        continue
                    key = (moved_size, tuple(moved))
                    if best is None or key < best[0]:
                        best = (key, shift.compose(shear), moved)
        if best is None:
            break
        _, step, current = best
        total_map = step.compose(total_map)
        current_size = max(sum(p) for p in current)
    after = check_pairsum(current).is_dps
    if before != after:
        raise AssertionError("unimodular reduction changed the dps verdict")
    if sorted(total_map.apply_point(p) for p in original) != current:
        raise AssertionError("composed reduction map does not reproduce the point set")
    return total_map.apply(polytope), total_map
