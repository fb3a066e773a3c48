"""Sparse exact-rational polynomials and forced Gram matrices.

A polynomial whose support cage halves to a dps lattice polytope has at
most one unordered pair of support points generating each monomial, so
the Gram matrix of any sum-of-squares representation is pinned entry by
entry by the coefficients.  Positive semidefiniteness of that single
matrix then decides the sum-of-squares question outright, with the
square count given by an exact rational LDL^T factorization.  Supports
that are not dps are out of scope here and reported as undecided.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .checks import check_pairsum
from .errors import CageNotHalvable, DimensionMismatch, DomainError
from .geometry import LatticePolytope, Point, vadd


class SparsePolynomial:
    """Map from exponent vectors to nonzero rational coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms):
        if nvars < 0:
            raise DomainError("number of variables must be non-negative")
        items = terms.items() if isinstance(terms, dict) else terms
        acc: dict[Point, Fraction] = {}
        for exp, coef in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise DimensionMismatch(f"exponent {exp} does not have {nvars} entries")
            if any(e < 0 for e in exp):
                raise DomainError(f"negative exponent in {exp}")
            acc[exp] = acc.get(exp, Fraction(0)) + Fraction(coef)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms",
                           {exp: c for exp, c in sorted(acc.items()) if c})

    def __setattr__(self, name, value):
        raise AttributeError("SparsePolynomial is immutable")

    @classmethod
    def zero(cls, nvars: int) -> SparsePolynomial:
        return cls(nvars, {})

    @classmethod
    def monomial(cls, exp, coef=1) -> SparsePolynomial:
        exp = tuple(exp)
        return cls(len(exp), {exp: Fraction(coef)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> tuple[Point, ...]:
        return tuple(self.terms)

    def __eq__(self, other):
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, tuple(self.terms.items())))

    def __repr__(self):
        body = " + ".join(f"{c}*x^{list(e)}" for e, c in self.terms.items()) or "0"
        return f"SparsePolynomial({self.nvars}, {body})"

    def __add__(self, other):
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        if other.nvars != self.nvars:
            raise DimensionMismatch("cannot add polynomials in different variables")
        merged = dict(self.terms)
        for exp, coef in other.terms.items():
            merged[exp] = merged.get(exp, Fraction(0)) + coef
        return SparsePolynomial(self.nvars, merged)

    def __neg__(self):
        return SparsePolynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SparsePolynomial):
            if other.nvars != self.nvars:
                raise DimensionMismatch("cannot multiply polynomials in different variables")
            out: dict[Point, Fraction] = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    key = vadd(e1, e2)
                    out[key] = out.get(key, Fraction(0)) + c1 * c2
            return SparsePolynomial(self.nvars, out)
        return SparsePolynomial(self.nvars,
                                {e: c * Fraction(other) for e, c in self.terms.items()})

    __rmul__ = __mul__

    def evaluate(self, point) -> Fraction:
        """Exact value at a point with integer or Fraction coordinates."""
        if len(point) != self.nvars:
            raise DimensionMismatch("evaluation point has wrong arity")
        xs = [Fraction(x) for x in point]
        total = Fraction(0)
        for exp, coef in self.terms.items():
            val = coef
            for x, e in zip(xs, exp):
                if e:
                    val *= x ** e
            total += val
        return total


# ---------------------------------------------------------------------------
# Newton cages and pair-index sets


def newton_cage(p: SparsePolynomial):
    """Hull of the support and its exact half.

    Every vertex of the cage must have even coordinates (true for any
    polynomial that is non-negative everywhere); otherwise the cage cannot
    be halved to a lattice polytope and this method does not apply.
    Returns (cage, half).
    """
    if p.is_zero:
        raise DomainError("the zero polynomial has no Newton cage")
    cage = LatticePolytope(p.support())
    for v in cage.vertices:
        if any(c % 2 for c in v):
            raise CageNotHalvable(f"cage vertex {v} has an odd coordinate")
    half = LatticePolytope([tuple(c // 2 for c in v) for v in cage.vertices])
    return cage, half


def pair_sets(support) -> dict[Point, tuple[tuple[int, int], ...]]:
    """Ordered index pairs (i, j) grouped by the sum v_i + v_j.

    Indices refer to the sorted deduplicated support; (i, i) appears once,
    off-diagonal sums contribute both (i, j) and (j, i).
    """
    pts = sorted({tuple(p) for p in support})
    out: dict[Point, list[tuple[int, int]]] = {}
    for i, vi in enumerate(pts):
        for j, vj in enumerate(pts):
            out.setdefault(vadd(vi, vj), []).append((i, j))
    return {u: tuple(sorted(pairs)) for u, pairs in sorted(out.items())}


@dataclass(frozen=True, eq=False)
class GramSystem:
    """Support, pair-index sets, and the forced matrix when the support is dps.

    uncovered lists exponents carrying a nonzero coefficient that no pair of
    support points can generate; a nonempty list makes the constraint system
    infeasible, so no Gram matrix (and no sum-of-squares form) exists.
    """

    support: tuple[Point, ...]
    pair_sets: dict[Point, tuple[tuple[int, int], ...]]
    forced_matrix: tuple[tuple[Fraction, ...], ...] | None
    status: str  # "forced" | "underdetermined"
    uncovered: tuple[Point, ...]


def forced_gram(p: SparsePolynomial) -> GramSystem:
    """Fill the Gram matrix pinned by the coefficients over a dps support.

    Diagonal entries come from the doubled support points, off-diagonal
    entries are half the coefficient of the mixed sum (exact), and zero
    coefficients force zero entries.  A support that is not dps leaves the
    system underdetermined and no matrix is produced.
    """
    _, half = newton_cage(p)
    support = half.lattice_points
    dsets = pair_sets(support)
    uncovered = tuple(sorted(u for u in p.terms if u not in dsets))
    if not check_pairsum(support).is_dps:
        return GramSystem(support, dsets, None, "underdetermined", uncovered)
    n = len(support)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i, v in enumerate(support):
        rows[i][i] = p.terms.get(vadd(v, v), Fraction(0))
    for i in range(n):
        for j in range(i + 1, n):
            coef = p.terms.get(vadd(support[i], support[j]), Fraction(0))
            rows[i][j] = rows[j][i] = coef / 2
    matrix = tuple(tuple(row) for row in rows)
    return GramSystem(support, dsets, matrix, "forced", uncovered)


def constraints_satisfied(system: GramSystem, p: SparsePolynomial) -> bool:
    """Exact check that the matrix meets every coefficient constraint of p."""
    if system.forced_matrix is None:
        return False
    for u, pairs in system.pair_sets.items():
        total = sum((system.forced_matrix[i][j] for i, j in pairs), Fraction(0))
        if total != p.terms.get(u, Fraction(0)):
            return False
    return all(u in system.pair_sets for u in p.terms)


# ---------------------------------------------------------------------------
# exact positive semidefiniteness


@dataclass(frozen=True)
class PsdReport:
    """Outcome of the exact LDL^T factorization.

    When is_psd holds, the matrix equals sum_k weights[k] * c_k c_k^T with
    c_k = columns[k], and rank is the number of positive pivots.  For a
    matrix that is not psd the partial data is meaningless beyond the flag.
    """

    is_psd: bool
    rank: int
    pivots: tuple[int, ...]
    weights: tuple[Fraction, ...]
    columns: tuple[tuple[Fraction, ...], ...]


def psd_check_exact(matrix) -> PsdReport:
    """Decide positive semidefiniteness in exact rational arithmetic.

    Outer-product elimination with symmetric pivoting; the pivot is always
    the smallest index whose residual diagonal entry is positive.  A
    negative residual diagonal refutes psd immediately; if the remaining
    diagonal is all zero the matrix is psd exactly when the whole residual
    vanishes.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise DomainError("matrix must be square")
    a = [[Fraction(x) for x in row] for row in matrix]
    for i in range(n):
        for j in range(i + 1, n):
            if a[i][j] != a[j][i]:
                raise DomainError("matrix must be symmetric")
    pivots: list[int] = []
    weights: list[Fraction] = []
    columns: list[tuple[Fraction, ...]] = []
    remaining = list(range(n))
    while True:
        if any(a[i][i] < 0 for i in remaining):
            return PsdReport(False, len(pivots), tuple(pivots), tuple(weights),
                             tuple(columns))
        pivot = next((i for i in remaining if a[i][i] > 0), None)
        if pivot is None:
            off = any(a[i][j] for i in remaining for j in remaining)
            return PsdReport(not off, len(pivots), tuple(pivots), tuple(weights),
                             tuple(columns))
        d = a[pivot][pivot]
        live = set(remaining)
        col = tuple(a[i][pivot] / d if i in live else Fraction(0) for i in range(n))
        for i in remaining:
            for j in remaining:
                a[i][j] -= d * col[i] * col[j]
        remaining.remove(pivot)
        pivots.append(pivot)
        weights.append(d)
        columns.append(col)


# ---------------------------------------------------------------------------
# verdicts and generators


@dataclass(frozen=True)
class SosVerdict:
    kind: str  # "sos" | "not_sos" | "undecided"
    count: int | None = None
    squares: tuple[tuple[Fraction, SparsePolynomial], ...] | None = None
    reason: str | None = None


def sos_verdict(p: SparsePolynomial) -> SosVerdict:
    """Decide the sum-of-squares question when the Gram matrix is forced.

    sos verdicts carry the exact decomposition sum_k w_k g_k^2, re-expanded
    and compared to p before being returned; the square count equals the
    rank of the forced matrix and cannot be lowered.  Supports that are not
    dps (or cages that do not halve) yield "undecided": deciding those
    needs machinery beyond a forced matrix.
    """
    if p.is_zero:
        return SosVerdict("sos", 0, ())
    try:
        system = forced_gram(p)
    except CageNotHalvable as exc:
        return SosVerdict("undecided", reason=str(exc))
    if system.status == "underdetermined":
        return SosVerdict("undecided",
                          reason="support is not dps, so the Gram matrix is not forced")
    if system.uncovered:
        return SosVerdict("not_sos",
                          reason=f"coefficient at {system.uncovered[0]} has no "
                                 "generating pair of support points")
    report = psd_check_exact(system.forced_matrix)
    if not report.is_psd:
        return SosVerdict("not_sos", reason="forced Gram matrix is not positive semidefinite")
    squares = []
    total = SparsePolynomial.zero(p.nvars)
    for weight, col in zip(report.weights, report.columns):
        g = SparsePolynomial(p.nvars,
                             {system.support[j]: col[j] for j in range(len(col)) if col[j]})
        squares.append((weight, g))
        total = total + weight * (g * g)
    if total != p:
        raise AssertionError("square extraction failed to re-expand to the input")
    return SosVerdict("sos", report.rank, tuple(squares))


def build_hp(polytope: LatticePolytope) -> SparsePolynomial:
    """The canonical sum of squared monomials over the lattice points.

    Term x^(2v) for every lattice point v; doubles of distinct points are
    distinct, so the polynomial always has exactly N terms.
    """
    pts = polytope.lattice_points
    if any(c < 0 for v in pts for c in v):
        raise DomainError("monomial exponents need the non-negative orthant")
    return SparsePolynomial(polytope.dim,
                            {tuple(2 * c for c in v): Fraction(1) for v in pts})


def substitute_quadratic(matrix, monomials) -> SparsePolynomial:
    """Expand sum_ij a_ij m_i m_j for monomials given as exponent vectors."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise DomainError("matrix must be square")
    if len(monomials) != n:
        raise DimensionMismatch("need one monomial per matrix row")
    exps = [tuple(int(e) for e in m) for m in monomials]
    nvars = len(exps[0]) if exps else 0
    if any(len(e) != nvars for e in exps):
        raise DimensionMismatch("monomials must share the variable count")
    acc: dict[Point, Fraction] = {}
    for i in range(n):
        for j in range(n):
            coef = Fraction(matrix[i][j])
            if coef:
                key = vadd(exps[i], exps[j])
                acc[key] = acc.get(key, Fraction(0)) + coef
    return SparsePolynomial(nvars, acc)


def grid_min(p: SparsePolynomial, radius, steps: int) -> Fraction:
    """Exact minimum of p over the uniform rational grid [-radius, radius]^nvars.

    steps is the number of subdivisions per axis, so each axis carries
    steps + 1 sample points including both endpoints.  Sampling evidence
    only: a non-negative grid minimum proves nothing off the grid.
    """
    if steps < 1:
        raise DomainError("need at least one subdivision step")
    radius = Fraction(radius)
    axis = [-radius + 2 * radius * Fraction(t, steps) for t in range(steps + 1)]
    best: Fraction | None = None
    for xs in itertools.product(axis, repeat=p.nvars):
        val = p.evaluate(xs)
        if best is None or val < best:
            best = val
    return best
