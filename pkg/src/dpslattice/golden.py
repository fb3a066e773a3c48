"""Bundled demonstration objects, numbered 1-4 as in the CLI `example` command.

These small exact objects double as the golden corpus for the test suite:
  1. the size-3 maximal dps triangle in the plane,
  2. an 8-point maximal dps polytope in R^4 inside the sum-5 hyperplane,
     whose projection to the first three coordinates is maximal in R^3,
  3. the lift of (1) to R^3 together with the coordinate-reducing shear,
  4. the ternary sextic that is non-negative everywhere yet not a sum of
     squares, built from the support of (1) homogenized.
"""

from __future__ import annotations

from fractions import Fraction

from .geometry import LatticePolytope, UnimodularAffineMap

TRIANGLE_VERTICES = ((0, 1), (1, 2), (2, 0))
TRIANGLE_LATTICE = ((0, 1), (1, 1), (1, 2), (2, 0))
TRIANGLE_PAIR_SUMS = ((0, 2), (1, 2), (1, 3), (2, 1), (2, 2),
                      (2, 3), (2, 4), (3, 1), (3, 2), (4, 0))

OCTET_OUTER = ((4, 1, 0, 0), (0, 4, 1, 0), (0, 0, 4, 1), (1, 0, 0, 4))
OCTET_INNER = ((2, 1, 1, 1), (1, 2, 1, 1), (1, 1, 2, 1), (1, 1, 1, 2))

LIFT_LOW = ((0, 1, 0), (1, 1, 0), (1, 2, 0), (2, 0, 0))
LIFT_HIGH = ((3, 1, 1), (13, 4, 1), (16, 5, 1), (20, 6, 1))
SHEARED_LOW = ((2, 1, 0), (3, 1, 0), (0, 2, 0), (7, 0, 0))
SHEARED_HIGH = ((0, 0, 1), (1, 3, 1), (1, 4, 1), (2, 5, 1))

SEXTIC_MONOMIALS = ((0, 1, 2), (1, 2, 0), (2, 0, 1), (1, 1, 1))


def triangle() -> LatticePolytope:
    """Example 1: triangle with vertices (0,1), (1,2), (2,0)."""
    return LatticePolytope(TRIANGLE_VERTICES)


def octet_4d() -> LatticePolytope:
    """Example 2: hull of the eight points in R^4."""
    return LatticePolytope(OCTET_OUTER + OCTET_INNER)


def octet_3d() -> LatticePolytope:
    """Example 2 projected onto its first three coordinates."""
    return octet_4d().project((0, 1, 2))


def lifted_triangle() -> LatticePolytope:
    """Example 3: the triangle lifted one dimension up, before shearing."""
    return LatticePolytope(LIFT_LOW + LIFT_HIGH)


def reducing_shear() -> UnimodularAffineMap:
    """The shear (x1, x2, x3) -> (x1 - 3 x2 - 5 x3 + 5, x2 - x3, x3)."""
    return UnimodularAffineMap(((1, -3, -5), (0, 1, -1), (0, 0, 1)), (5, 0, 0))


def sextic_gap():
    """Example 4: x2^2 x3^4 + x1^2 x2^4 + x1^4 x3^2 - 3 x1^2 x2^2 x3^2."""
    from .sospoly import SparsePolynomial

    return SparsePolynomial(3, {(0, 2, 4): Fraction(1), (2, 4, 0): Fraction(1),
                                (4, 0, 2): Fraction(1), (2, 2, 2): Fraction(-3)})


def polytope_example(number: int) -> LatticePolytope:
    makers = {1: triangle, 2: octet_4d, 3: lifted_triangle}
    if number not in makers:
        raise KeyError(f"no polytope example {number}")
    return makers[number]()
