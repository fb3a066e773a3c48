"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the library's own hull machinery:
membership is decided by enumerating affinely independent subsets and
solving the barycentric system with a local rational solver, so the two
routes share no code beyond tuple arithmetic.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from dpslattice import LatticePolytope, UnimodularAffineMap


# ---------------------------------------------------------------------------
# independent exact membership oracle


def _solve_exact(rows, rhs):
    """Solve rows @ x = rhs over the rationals; None if inconsistent,
    a single solution (free variables zero) otherwise."""
    m, n = len(rows), len(rows[0]) if rows else 0
    aug = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    pivots = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, m) if aug[i][col]), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = 1 / aug[r][col]
        aug[r] = [a * inv for a in aug[r]]
        for i in range(m):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    for i in range(r, m):
        if aug[i][n]:
            return None
    x = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        x[col] = aug[i][n]
    return x


def hull_membership_oracle(points, x) -> bool:
    """Is x in the convex hull?  Brute-force convex-combination search:
    some subset of at most dim+1 points admits non-negative barycentric
    weights summing to one (Caratheodory), checked exactly."""
    pts = list(points)
    dim = len(pts[0])
    x = [Fraction(c) for c in x]
    for size in range(1, dim + 2):
        for subset in itertools.combinations(pts, size):
            rows = [[Fraction(p[i]) for p in subset] for i in range(dim)]
            rows.append([Fraction(1)] * size)
            sol = _solve_exact(rows, x + [Fraction(1)])
            if sol is not None and all(w >= 0 for w in sol):
                return True
    return False


def naive_det(matrix):
    """Cofactor-expansion determinant, independent of the library's routines."""
    n = len(matrix)
    if n == 0:
        return 1
    if n == 1:
        return matrix[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = matrix[0][j] * naive_det(minor)
        total += term if j % 2 == 0 else -term
    return total


def principal_minors_psd(matrix) -> bool:
    """psd iff every principal minor is non-negative (brute force)."""
    n = len(matrix)
    for size in range(1, n + 1):
        for subset in itertools.combinations(range(n), size):
            sub = [[matrix[i][j] for j in subset] for i in subset]
            if naive_det(sub) < 0:
                return False
    return True


# ---------------------------------------------------------------------------
# random generators (all seeded by the caller)


def random_point_set(rng: random.Random, dim: int, count: int, low=-4, high=4):
    pts = set()
    while len(pts) < count:
        pts.add(tuple(rng.randint(low, high) for _ in range(dim)))
    return sorted(pts)


def random_lattice_point_set(rng: random.Random, dim: int, max_points: int):
    """The full lattice-point set of a random small polytope."""
    while True:
        generators = random_point_set(rng, dim, rng.randint(1, dim + 2), 0, 3)
        pts = LatticePolytope(generators).lattice_points
        if len(pts) <= max_points:
            return pts


def random_unimodular_map(rng: random.Random, dim: int, ops: int = 6):
    """Product of elementary integer operations plus a small translation."""
    m = UnimodularAffineMap.identity(dim)
    for _ in range(rng.randint(1, ops)):
        kind = rng.choice(("shear", "swap", "negate")) if dim > 1 else "negate"
        if kind == "shear":
            i, j = rng.sample(range(dim), 2)
            m = UnimodularAffineMap.shear(dim, i, j, rng.choice((-2, -1, 1, 2))).compose(m)
        elif kind == "swap":
            i, j = rng.sample(range(dim), 2)
            rows = [[int(r == c) for c in range(dim)] for r in range(dim)]
            rows[i], rows[j] = rows[j], rows[i]
            m = UnimodularAffineMap(tuple(tuple(r) for r in rows), (0,) * dim).compose(m)
        else:
            i = rng.randrange(dim)
            rows = [[int(r == c) for c in range(dim)] for r in range(dim)]
            rows[i][i] = -1
            m = UnimodularAffineMap(tuple(tuple(r) for r in rows), (0,) * dim).compose(m)
    shift = tuple(rng.randint(-3, 3) for _ in range(dim))
    return UnimodularAffineMap(m.matrix, shift)


# ---------------------------------------------------------------------------
# fixtures


@pytest.fixture
def rng():
    return random.Random(0xD95)


@pytest.fixture
def triangle():
    from dpslattice import golden

    return golden.triangle()
