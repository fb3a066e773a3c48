"""Exhaustive pruned searches over small dps polytopes.

The searcher walks the parity-class skeleton: a maximal dps polytope hits
every coordinate-parity class modulo 2 exactly once, so candidates are
grouped by parity vector and the search picks one point per class, pruning
the branch on the first pair-sum collision.  Emitted witnesses are
re-validated: per-coordinate minimum 0, and the hull contains no lattice
point beyond the chosen set.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial

from .checks import check_pairsum, parity
from .errors import DomainError, NotDps
from .geometry import (Containment, LatticePolytope, Point, content_gcd, vadd,
                       vsub)

_PRUNE_KEYS = ("pairsum", "primitivity", "min_coordinate", "hull_excess",
               "symmetry")


@dataclass(frozen=True)
class SearchSpec:
    dim: int
    max_size: int
    require_maximal: bool = True
    all_witnesses: bool = True
    symmetry_reduction: bool = False
    thread_count: int = 1

    def __post_init__(self):
        if self.dim < 1:
            raise DomainError("search dimension must be at least 1")
        if self.max_size < 0:
            raise DomainError("max_size must be non-negative")
        if self.thread_count < 1:
            raise DomainError("thread_count must be positive")


@dataclass
class SearchReport:
    witnesses: tuple[LatticePolytope, ...]
    nodes_explored: int
    pruned_by: dict[str, int]
    elapsed: float

    @property
    def witness_point_sets(self) -> tuple[tuple[Point, ...], ...]:
        return tuple(w.lattice_points for w in self.witnesses)


def candidate_points(dim: int, s: int) -> list[Point]:
    """All points with non-negative coordinates summing to at most s, in lex order."""
    return [p for p in itertools.product(range(s + 1), repeat=dim) if sum(p) <= s]


def _canonical_under_permutation(points) -> tuple[Point, ...]:
    """Lexicographically smallest sorted point list over coordinate permutations."""
    dim = len(points[0])
    return min(tuple(sorted(tuple(p[i] for i in perm) for p in points))
               for perm in itertools.permutations(range(dim)))


class _Searcher:
    def __init__(self, spec: SearchSpec):
        self.spec = spec
        self.candidates = candidate_points(spec.dim, spec.max_size)
        by_class: dict[tuple[int, ...], list[Point]] = {}
        for p in self.candidates:
            by_class.setdefault(parity(p), []).append(p)
        classes = sorted(itertools.product((0, 1), repeat=spec.dim))
        # fewest candidates first keeps the tree narrow near the root
        self.class_order = sorted(classes, key=lambda c: (len(by_class.get(c, [])), c))
        self.by_class = by_class
        self.nodes = 0
        self.pruned = dict.fromkeys(_PRUNE_KEYS, 0)
        self.witnesses: list[tuple[Point, ...]] = []
        self.stop = False

    def run(self, first_choices=None):
        chosen: list[Point] = []
        sums: set[Point] = set()
        self._extend(0, chosen, sums, first_choices)

    def _extend(self, depth, chosen, sums, first_choices):
        if self.stop:
            return
        if depth == len(self.class_order):
            if chosen:
                self._emit(chosen)
            return
        if not self.spec.require_maximal:
            # a non-maximal search may leave any parity class unused
            self._extend(depth + 1, chosen, sums, None)
        candidates = self.by_class.get(self.class_order[depth], [])
        if depth == 0 and first_choices is not None:
            candidates = first_choices
        for p in candidates:
            if self.stop:
                return
            self.nodes += 1
            # An imprimitive difference dooms the branch: the segment then
            # carries interior lattice points, and each is either a chosen
            # point (midpoint pair-sum collision) or hull excess later.
            if any(content_gcd(vsub(p, q)) != 1 for q in chosen):
                self.pruned["primitivity"] += 1
                continue
            fresh = [vadd(p, q) for q in chosen]
            fresh.append(vadd(p, p))
            if any(s in sums for s in fresh):
                self.pruned["pairsum"] += 1
                continue
            sums.update(fresh)
            chosen.append(p)
            self._extend(depth + 1, chosen, sums, None)
            chosen.pop()
            sums.difference_update(fresh)

    def _emit(self, chosen):
        dim = self.spec.dim
        if any(min(p[i] for p in chosen) != 0 for i in range(dim)):
            self.pruned["min_coordinate"] += 1
            return
        ordered = tuple(sorted(chosen))
        # The hull stays inside the simplex region, so the only possible
        # extra lattice points are unchosen candidates.
        poly = LatticePolytope(ordered)
        members = set(ordered)
        for c in self.candidates:
            if c not in members and poly.contains(c) is not Containment.OUTSIDE:
                self.pruned["hull_excess"] += 1
                return
        self.witnesses.append(ordered)
        if not self.spec.all_witnesses:
            self.stop = True


def _search_branch(spec: SearchSpec, first_choice: Point):
    searcher = _Searcher(spec)
    searcher.run(first_choices=[first_choice])
    return searcher.witnesses, searcher.nodes, searcher.pruned


def min_size_search(spec: SearchSpec) -> SearchReport:
    """Find point sets that are the full lattice-point set of a dps polytope
    within the size bound, organized by parity class.

    With require_maximal (the default) a witness occupies all 2^dim parity
    classes.  Searches with all_witnesses=False run sequentially and stop at
    the first witness; parallel runs partition the first class's candidates
    across processes and merge in candidate order, so the witness list does
    not depend on thread_count.
    """
    start = time.perf_counter()
    witnesses: list[tuple[Point, ...]] = []
    nodes = 0
    pruned = dict.fromkeys(_PRUNE_KEYS, 0)

    searcher = _Searcher(spec)
    first_class = searcher.class_order[0] if searcher.class_order else None
    first_candidates = searcher.by_class.get(first_class, []) if first_class else []
    missing = spec.require_maximal and any(
        not searcher.by_class.get(cls) for cls in searcher.class_order)

    if missing:
        pass  # some parity class has no candidate at this size: no witnesses
    elif spec.thread_count > 1 and spec.all_witnesses and spec.require_maximal:
        with ProcessPoolExecutor(max_workers=spec.thread_count) as pool:
            for branch_witnesses, branch_nodes, branch_pruned in pool.map(
                    partial(_search_branch, spec), first_candidates):
                witnesses.extend(branch_witnesses)
                nodes += branch_nodes
                for key, count in branch_pruned.items():
                    pruned[key] += count
    else:
        searcher.run()
        witnesses = searcher.witnesses
        nodes = searcher.nodes
        pruned = searcher.pruned

    if spec.symmetry_reduction:
        kept = []
        for w in witnesses:
            if _canonical_under_permutation(w) == w:
                kept.append(w)
            else:
                pruned["symmetry"] += 1
        witnesses = kept

    elapsed = time.perf_counter() - start
    polys = tuple(LatticePolytope(w, _lattice_points=w) for w in witnesses)
    return SearchReport(polys, nodes, pruned, elapsed)


# ---------------------------------------------------------------------------
# witness classification


@dataclass(frozen=True)
class PlaneWitnessSummary:
    """Outcome of checking the plane classification on every witness."""

    total: int
    conforming: int
    violations: tuple[tuple[Point, ...], ...]

    @property
    def all_conforming(self) -> bool:
        return self.conforming == self.total


def classify_r2_witnesses(report: SearchReport) -> PlaneWitnessSummary:
    """Check each plane witness: a triangle of twice-area 3 whose single
    non-vertex lattice point is the vertex centroid (an exact integer
    identity: vertex sum = 3 * interior point).

    A violation would contradict the classification of maximal dps polygons
    and is reported rather than raised.
    """
    violations = []
    for poly in report.witnesses:
        if poly.dim != 2:
            raise DomainError("plane classification expects a dim-2 search report")
        pts = poly.lattice_points
        if len(pts) != 4 or not check_pairsum(pts).is_dps:
            raise DomainError(f"not a maximal dps witness: {pts}")
        verts = poly.vertices
        inner = [p for p in pts if p not in verts]
        ok = (len(verts) == 3 and len(inner) == 1)
        if ok:
            a, b, c = verts
            u, v = vsub(b, a), vsub(c, a)
            twice_area = abs(u[0] * v[1] - u[1] * v[0])
            centroid_identity = vadd(vadd(a, b), c) == tuple(3 * x for x in inner[0])
            ok = twice_area == 3 and centroid_identity
        if not ok:
            violations.append(pts)
    total = len(report.witnesses)
    return PlaneWitnessSummary(total, total - len(violations), tuple(violations))


@dataclass(frozen=True)
class CombinatorialType:
    vertex_count: int
    boundary_nonvertex_count: int
    interior_count: int

    @property
    def all_boundary(self) -> bool:
        return self.interior_count == 0


def combinatorial_type(polytope: LatticePolytope) -> CombinatorialType:
    """Boundary/interior census of a maximal dps polytope's lattice points.

    Maximality is taken relative to the affine hull: a polytope spanning a
    k-dimensional affine subspace meets at most 2^k parity classes of that
    subspace's lattice, so 2^k points is the ceiling there.
    """
    pts = polytope.lattice_points
    if len(pts) != 2 ** polytope.affine_dim or not check_pairsum(pts).is_dps:
        raise NotDps("combinatorial type is defined for maximal dps polytopes")
    labels = polytope.classify_lattice_points().values()
    counts = {label.value: 0 for label in labels}
    for label in labels:
        counts[label.value] += 1
    return CombinatorialType(counts.get("vertex", 0),
                             counts.get("boundary_nonvertex", 0),
                             counts.get("interior", 0))


# ---------------------------------------------------------------------------
# experimental extension probe


def extend_to_maximal(polytope: LatticePolytope, candidate_region_size: int):
    """Try to grow a dps polytope to a maximal one inside a bounded box.

    Candidates are lattice points with every |coordinate| at most the given
    region size.  Returns the first extension found in deterministic order,
    or None.  Exhausting the box proves nothing about extendability beyond
    it; the box bound is part of the answer's meaning.
    """
    pts = polytope.lattice_points
    if not check_pairsum(pts).is_dps:
        raise NotDps("extension requires a dps polytope")
    dim = polytope.dim
    target = 2 ** dim
    if len(pts) == target:
        return polytope
    occupied = {parity(p) for p in pts}
    missing = sorted(cls for cls in itertools.product((0, 1), repeat=dim)
                     if cls not in occupied)
    box = itertools.product(*(range(-candidate_region_size, candidate_region_size + 1)
                              for _ in range(dim)))
    by_class: dict[tuple[int, ...], list[Point]] = {cls: [] for cls in missing}
    for p in box:
        cls = parity(p)
        if cls in by_class:
            by_class[cls].append(p)

    sums = {vadd(a, b) for i, a in enumerate(pts) for b in pts[i:]}
    chosen: list[Point] = []

    def descend(depth: int):
        if depth == len(missing):
            full = tuple(sorted(pts + tuple(chosen)))
            candidate = LatticePolytope(full)
            if candidate.lattice_points == full:
                return candidate
            return None
        for p in by_class[missing[depth]]:
            fresh = [vadd(p, q) for q in pts]
            fresh.extend(vadd(p, q) for q in chosen)
            fresh.append(vadd(p, p))
            if any(s in sums for s in fresh):
                continue
            sums.update(fresh)
            chosen.append(p)
            found = descend(depth + 1)
            chosen.pop()
            sums.difference_update(fresh)
            if found is not None:
                return found
        return None

    return descend(0)
