"""Exact integer and rational geometry for lattice polytopes.

Points are plain tuples of Python ints, so equality, hashing and
lexicographic order come for free and coordinates of any magnitude stay
exact.  Hull computations use integers where possible and
fractions.Fraction otherwise; the module contains no floats.

Polytopes are stored by their generating points (V-representation).
Facets, vertices and lattice points are computed on demand by exhaustive
exact procedures sized for small instances, then cached.  Polytopes whose
affine hull is lower-dimensional than the ambient space are supported;
facets and point classification are taken relative to the affine hull.
"""

from __future__ import annotations

import itertools
import operator
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, lcm

from .errors import DimensionMismatch, DomainError, EmptyInput, NotUnimodular

Point = tuple[int, ...]
Vector = tuple[int, ...]


# ---------------------------------------------------------------------------
# vector and matrix helpers


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vneg(u):
    return tuple(-a for a in u)


def vdot(u, v):
    return sum(a * b for a, b in zip(u, v))


def content_gcd(u) -> int:
    """gcd of the absolute values of the entries; 0 only for the zero vector."""
    g = 0
    for a in u:
        g = gcd(g, abs(a))
    return g


def matvec(matrix, v):
    return tuple(vdot(row, v) for row in matrix)


def matmul(a, b):
    cols = list(zip(*b))
    return tuple(tuple(vdot(row, col) for col in cols) for row in a)


def det_int(matrix) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for col in range(n - 1):
        if m[col][col] == 0:
            for r in range(col + 1, n):
                if m[r][col] != 0:
                    m[col], m[r] = m[r], m[col]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                m[r][c] = (m[r][c] * m[col][col] - m[r][col] * m[col][c]) // prev
            m[r][col] = 0
        prev = m[col][col]
    return sign * m[n - 1][n - 1]


def _det_frac(rows) -> Fraction:
    """Determinant by exact Gaussian elimination; rows may mix int and Fraction."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    m = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] * inv
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return det


def _cross(vectors, k):
    """Vector orthogonal to k-1 vectors in Q^k (cofactor expansion); zero iff dependent."""
    det = det_int if all(isinstance(x, int) for v in vectors for x in v) else _det_frac
    comps = []
    for i in range(k):
        minor = [[v[j] for j in range(k) if j != i] for v in vectors]
        d = det(minor)
        comps.append(d if i % 2 == 0 else -d)
    return tuple(comps)


class _Echelon:
    """Incremental exact row echelon used for rank and independence tests."""

    def __init__(self):
        self.rows = []  # list of (pivot column, reduced row of Fractions)

    def add(self, vec) -> bool:
        """Reduce vec against the stored rows; keep and return True if independent."""
        v = [Fraction(x) for x in vec]
        for pivot, row in self.rows:
            if v[pivot]:
                f = v[pivot] / row[pivot]
                v = [a - f * b for a, b in zip(v, row)]
        for j, a in enumerate(v):
            if a:
                self.rows.append((j, v))
                return True
        return False


def rank(vectors) -> int:
    ech = _Echelon()
    return sum(ech.add(v) for v in vectors)


def _invert_frac(rows):
    """Exact inverse of a square matrix given as rows of Fractions."""
    n = len(rows)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if m[r][col])
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [a * inv for a in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [row[n:] for row in m]


def _solve_underdetermined(rows, rhs):
    """One exact solution x of <rows[i], x> = rhs[i]; free variables set to 0.

    Assumes the system is consistent with independent rows.
    """
    k = len(rows)
    n = len(rows[0])
    aug = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    pivots = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, k) if aug[i][col]), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = 1 / aug[r][col]
        aug[r] = [a * inv for a in aug[r]]
        for i in range(k):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
        if r == k:
            break
    x = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        x[col] = aug[i][n]
    return x


def _clear_denominators(normal, offset):
    if isinstance(offset, int) and all(isinstance(a, int) for a in normal):
        return list(normal), offset
    mult = lcm(*(Fraction(a).denominator for a in normal), Fraction(offset).denominator)
    return [int(a * mult) for a in normal], int(Fraction(offset) * mult)


def _canonical_functional(normal, offset):
    """Integer form of <normal, x> <= offset, reduced by the joint gcd.

    Canonical for deduplication; the normal's own content may exceed 1
    when the offset shares no factor with it (possible for functionals on
    rational relative coordinates).
    """
    ints, off = _clear_denominators(normal, offset)
    g = gcd(content_gcd(ints), abs(off))
    if g > 1:
        ints = [a // g for a in ints]
        off //= g
    return tuple(ints), off


def _primitive_functional(normal, offset):
    """Integer form with primitive normal; sound for ambient facets only.

    A supporting hyperplane of a lattice polytope contains lattice points,
    so the normal's content always divides the offset there.
    """
    ints, off = _clear_denominators(normal, offset)
    g = content_gcd(ints)
    if g > 1:
        if off % g:
            raise ArithmeticError("facet offset not divisible by normal content")
        ints = [a // g for a in ints]
        off //= g
    return tuple(ints), off


# ---------------------------------------------------------------------------
# affine hulls


class _AffineHull:
    """Base point plus an exact basis of the direction space, with a solver.

    For a full-dimensional hull the basis is the standard one and relative
    coordinates stay integers.  Otherwise relative coordinates are Fractions
    obtained from a precomputed inverse of an independent row submatrix.
    """

    def __init__(self, points):
        self.base = points[0]
        n = len(self.base)
        ech = _Echelon()
        basis = []
        for p in points[1:]:
            d = vsub(p, self.base)
            if any(d) and ech.add(d):
                basis.append(d)
                if len(basis) == n:
                    break
        if len(basis) == n:
            basis = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        self.k = len(basis)
        self.basis = tuple(basis)
        self.full = self.k == n
        if not self.full and self.k > 0:
            rows = [tuple(b[i] for b in basis) for i in range(n)]
            ech = _Echelon()
            self._pivot_rows = [i for i, row in enumerate(rows) if ech.add(row)]
            sub = [rows[i] for i in self._pivot_rows]
            self._inverse = _invert_frac(sub)

    def coords(self, x):
        """Coordinates of x in (base + direction space), or None outside the affine hull."""
        y = vsub(x, self.base)
        if self.full:
            return y
        if self.k == 0:
            return () if not any(y) else None
        t = [sum(row[j] * y[self._pivot_rows[j]] for j in range(self.k))
             for row in self._inverse]
        for i, yi in enumerate(y):
            if sum(self.basis[j][i] * t[j] for j in range(self.k)) != yi:
                return None
        return tuple(t)

    def lift_functional(self, g, c):
        """Ambient integer (normal, offset) matching relative inequality <g, t> <= c."""
        if self.full:
            return _primitive_functional(g, vdot(g, self.base) + c)
        n_tilde = _solve_underdetermined(self.basis, g)
        return _primitive_functional(n_tilde, vdot(n_tilde, self.base) + c)


# ---------------------------------------------------------------------------
# polytopes


class Containment(Enum):
    INSIDE = "inside"
    ON_BOUNDARY = "on_boundary"
    OUTSIDE = "outside"


class PointClass(Enum):
    VERTEX = "vertex"
    BOUNDARY_NONVERTEX = "boundary_nonvertex"
    INTERIOR = "interior"


@dataclass(frozen=True)
class Facet:
    """Supporting halfspace normal . x <= offset, tight on a facet of the hull.

    The normal is a primitive integer vector; for lower-dimensional polytopes
    it is one valid ambient representative of the relative facet.
    """

    normal: Vector
    offset: int

    def evaluate(self, x):
        return vdot(self.normal, x) - self.offset


def _as_point(p) -> Point:
    try:
        return tuple(operator.index(c) for c in p)
    except TypeError as exc:
        raise DomainError(f"lattice point coordinates must be integers: {p!r}") from exc


class LatticePolytope:
    """Convex hull of finitely many integer points, with exact derived data.

    Instances are immutable values; derived data (affine hull, facets,
    vertices, lattice points) is computed lazily and idempotently, so
    concurrent readers may share an instance without coordination.
    """

    __slots__ = ("dim", "generators", "_hull", "_facets", "_rel_facets",
                 "_vertices", "_lattice_points")

    def __init__(self, points, *, _lattice_points=None):
        pts = sorted({_as_point(p) for p in points})
        if not pts:
            raise EmptyInput("a polytope needs at least one generating point")
        dims = {len(p) for p in pts}
        if len(dims) != 1:
            raise DimensionMismatch(f"mixed point dimensions {sorted(dims)}")
        (dim,) = dims
        if dim < 1:
            raise DomainError("ambient dimension must be positive")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "generators", tuple(pts))
        object.__setattr__(self, "_hull", None)
        object.__setattr__(self, "_facets", None)
        object.__setattr__(self, "_rel_facets", None)
        object.__setattr__(self, "_vertices", None)
        object.__setattr__(self, "_lattice_points",
                           tuple(sorted(_lattice_points)) if _lattice_points is not None else None)

    def __setattr__(self, name, value):
        raise AttributeError("LatticePolytope is immutable")

    def __repr__(self):
        return f"LatticePolytope(dim={self.dim}, generators={list(self.generators)!r})"

    def __eq__(self, other):
        if not isinstance(other, LatticePolytope):
            return NotImplemented
        return self.dim == other.dim and self.vertices == other.vertices

    def __hash__(self):
        return hash((self.dim, self.vertices))

    # -- affine hull -------------------------------------------------------

    @property
    def affine_hull(self) -> _AffineHull:
        if self._hull is None:
            object.__setattr__(self, "_hull", _AffineHull(self.generators))
        return self._hull

    @property
    def affine_dim(self) -> int:
        return self.affine_hull.k

    # -- facets ------------------------------------------------------------

    @property
    def facets(self) -> tuple[Facet, ...]:
        """Complete irredundant facet list relative to the affine hull.

        Computed by exhaustive enumeration of spanning point subsets with
        exact sidedness checks; sorted by (normal, offset).
        """
        if self._facets is None:
            self._compute_facets()
        return self._facets

    def _compute_facets(self):
        hull = self.affine_hull
        k = hull.k
        if k == 0:
            object.__setattr__(self, "_facets", ())
            object.__setattr__(self, "_rel_facets", ())
            return
        rel = [hull.coords(p) for p in self.generators]
        seen = {}
        for subset in itertools.combinations(range(len(rel)), k):
            vecs = [vsub(rel[i], rel[subset[0]]) for i in subset[1:]]
            normal = _cross(vecs, k)
            if not any(normal):
                continue
            c = vdot(normal, rel[subset[0]])
            above = below = False
            for q in rel:
                val = vdot(normal, q) - c
                if val > 0:
                    above = True
                elif val < 0:
                    below = True
                if above and below:
                    break
            if above and below:
                continue
            if above:
                normal, c = vneg(normal), -c
            seen.setdefault(_canonical_functional(normal, c), None)
        rel_facets = sorted(seen)
        ambient = [Facet(*hull.lift_functional(g, c)) for g, c in rel_facets]
        order = sorted(range(len(ambient)), key=lambda i: (ambient[i].normal, ambient[i].offset))
        object.__setattr__(self, "_facets", tuple(ambient[i] for i in order))
        object.__setattr__(self, "_rel_facets", tuple(rel_facets[i] for i in order))

    # -- vertices ----------------------------------------------------------

    @property
    def vertices(self) -> tuple[Point, ...]:
        """Extreme points of the hull, a subset of the generators, sorted."""
        if self._vertices is None:
            self.facets  # ensure relative facets exist
            hull = self.affine_hull
            k = hull.k
            if k == 0:
                object.__setattr__(self, "_vertices", (self.generators[0],))
            else:
                verts = []
                for p in self.generators:
                    t = hull.coords(p)
                    tight = [g for g, c in self._rel_facets if vdot(g, t) == c]
                    if rank(tight) == k:
                        verts.append(p)
                object.__setattr__(self, "_vertices", tuple(verts))
        return self._vertices

    # -- membership and enumeration ----------------------------------------

    def contains(self, x) -> Containment:
        """Exact hull membership for a point with integer or Fraction coordinates."""
        if len(x) != self.dim:
            raise DimensionMismatch(f"point of dim {len(x)} vs polytope of dim {self.dim}")
        hull = self.affine_hull
        t = hull.coords(tuple(x))
        if t is None:
            return Containment.OUTSIDE
        if hull.k == 0:
            return Containment.ON_BOUNDARY  # the single point is its own vertex
        tight = False
        for facet in self.facets:
            val = facet.evaluate(x)
            if val > 0:
                return Containment.OUTSIDE
            if val == 0:
                tight = True
        return Containment.ON_BOUNDARY if tight else Containment.INSIDE

    @property
    def lattice_points(self) -> tuple[Point, ...]:
        """All integer points of the hull, lexicographically sorted.

        Computed by an integer bounding-box scan with exact membership
        tests, which is adequate at the scale this library targets.
        """
        if self._lattice_points is None:
            los = [min(g[i] for g in self.generators) for i in range(self.dim)]
            his = [max(g[i] for g in self.generators) for i in range(self.dim)]
            self.facets  # compute once before the scan
            found = [p for p in itertools.product(*(range(lo, hi + 1) for lo, hi in zip(los, his)))
                     if self.contains(p) is not Containment.OUTSIDE]
            object.__setattr__(self, "_lattice_points", tuple(found))
        return self._lattice_points

    def classify_lattice_points(self) -> dict[Point, PointClass]:
        """Label every lattice point as vertex, boundary non-vertex, or interior.

        Interior means strictly inside relative to the affine hull, so the
        middle points of a segment count as interior.
        """
        verts = set(self.vertices)
        out = {}
        for p in self.lattice_points:
            if p in verts:
                out[p] = PointClass.VERTEX
            elif any(f.evaluate(p) == 0 for f in self.facets):
                out[p] = PointClass.BOUNDARY_NONVERTEX
            else:
                out[p] = PointClass.INTERIOR
        return out

    # -- size, normalization, embedding -------------------------------------

    def size(self) -> int:
        """Largest coordinate sum over the lattice points.

        The maximum of a linear functional over the hull is attained at a
        generator, so no enumeration is needed.  Requires the polytope to
        lie in the non-negative orthant.
        """
        for g in self.generators:
            if any(c < 0 for c in g):
                raise DomainError(f"size requires the non-negative orthant; found {g}")
        return max(sum(g) for g in self.generators)

    def translate_to_orthant(self) -> LatticePolytope:
        """Translate so every coordinate's minimum over the polytope is 0."""
        mins = [min(g[i] for g in self.generators) for i in range(self.dim)]
        if not any(mins):
            return self
        return self.translate(vneg(mins))

    def translate(self, t) -> LatticePolytope:
        t = _as_point(t)
        if len(t) != self.dim:
            raise DimensionMismatch("translation vector has wrong dimension")
        cache = None
        if self._lattice_points is not None:
            cache = [vadd(p, t) for p in self._lattice_points]
        return LatticePolytope((vadd(g, t) for g in self.generators), _lattice_points=cache)

    def homogenize(self, s: int) -> LatticePolytope:
        """Embed into the hyperplane of coordinate sum s one dimension up.

        Each point v maps to (v, s - sum(v)); projecting the result onto the
        first dim coordinates recovers this polytope.  The map is an affine
        bijection between the two hulls that matches their integer points,
        so a known lattice-point set carries over.
        """
        if s < self.size():
            raise DomainError(f"target sum {s} is below the polytope size {self.size()}")
        lift = lambda v: v + (s - sum(v),)
        cache = None
        if self._lattice_points is not None:
            cache = [lift(p) for p in self._lattice_points]
        return LatticePolytope((lift(g) for g in self.generators), _lattice_points=cache)

    def project(self, coords) -> LatticePolytope:
        """Project onto the given coordinate indices (generators only)."""
        return LatticePolytope(tuple(g[i] for i in coords) for g in self.generators)


# ---------------------------------------------------------------------------
# unimodular affine maps


@dataclass(frozen=True)
class UnimodularAffineMap:
    """x -> matrix @ x + translation with an integer matrix of determinant +-1.

    Such maps biject the integer lattice and preserve convex hulls in both
    directions, so they carry lattice-point sets exactly.
    """

    matrix: tuple[tuple[int, ...], ...]
    translation: tuple[int, ...]

    def __post_init__(self):
        matrix = tuple(_as_point(row) for row in self.matrix)
        translation = _as_point(self.translation)
        n = len(matrix)
        if n == 0 or any(len(row) != n for row in matrix):
            raise DimensionMismatch("matrix must be square and non-empty")
        if len(translation) != n:
            raise DimensionMismatch("translation length must match the matrix")
        if det_int(matrix) not in (1, -1):
            raise NotUnimodular(f"matrix determinant {det_int(matrix)} is not +-1")
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "translation", translation)

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @classmethod
    def identity(cls, dim: int) -> UnimodularAffineMap:
        return cls(tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim)),
                   (0,) * dim)

    @classmethod
    def from_translation(cls, t) -> UnimodularAffineMap:
        t = _as_point(t)
        return cls.identity(len(t))._replace_translation(t)

    @classmethod
    def shear(cls, dim: int, target: int, source: int, coeff: int) -> UnimodularAffineMap:
        """Elementary map x[target] += coeff * x[source]."""
        if target == source:
            raise DomainError("shear needs distinct coordinates")
        rows = [[int(i == j) for j in range(dim)] for i in range(dim)]
        rows[target][source] = coeff
        return cls(tuple(tuple(r) for r in rows), (0,) * dim)

    def _replace_translation(self, t) -> UnimodularAffineMap:
        return UnimodularAffineMap(self.matrix, t)

    def apply_point(self, p) -> Point:
        if len(p) != self.dim:
            raise DimensionMismatch("point dimension does not match the map")
        return vadd(matvec(self.matrix, p), self.translation)

    def apply(self, polytope: LatticePolytope) -> LatticePolytope:
        """Image polytope; a computed lattice-point cache transfers exactly."""
        if polytope.dim != self.dim:
            raise DimensionMismatch("polytope dimension does not match the map")
        cache = None
        if polytope._lattice_points is not None:
            cache = [self.apply_point(p) for p in polytope._lattice_points]
        return LatticePolytope((self.apply_point(g) for g in polytope.generators),
                               _lattice_points=cache)

    def compose(self, inner: UnimodularAffineMap) -> UnimodularAffineMap:
        """The map x -> self(inner(x))."""
        if inner.dim != self.dim:
            raise DimensionMismatch("cannot compose maps of different dimensions")
        return UnimodularAffineMap(matmul(self.matrix, inner.matrix),
                                   vadd(matvec(self.matrix, inner.translation),
                                        self.translation))

    def inverse(self) -> UnimodularAffineMap:
        rows = _invert_frac(self.matrix)
        inv = tuple(tuple(int(a) for a in row) for row in rows)  # exact: det is +-1
        return UnimodularAffineMap(inv, vneg(matvec(inv, self.translation)))
