"""Exact tools for distinct pair-sum (dps) lattice polytopes.

A lattice polytope is dps when all pairwise sums of its lattice points,
doubles included, are distinct.  The package verifies the property three
independent ways, constructs maximal dps polytopes in every dimension,
re-derives the minimal-size results by exhaustive search, and applies dps
supports to sum-of-squares analysis through forced Gram matrices.  All
arithmetic is exact: arbitrary-precision integers and rationals.
"""

from .checks import (DifferenceSet, DpsVerdict, check_direction,
                     check_geometric, check_pairsum, difference_set,
                     forced_integer_midpoint, is_dps_polytope, is_maximal_dps,
                     mod2_classes, parity)
from .construct import (LiftCertificate, build_lift_matrix, lift, lift_radius,
                        maximal_dps, maximal_dps_with_certificate,
                        reduce_coordinates, verify_separation)
from .errors import (CageNotHalvable, DimensionMismatch, DomainError,
                     EmptyInput, NotDps, NotUnimodular)
from .geometry import (Containment, Facet, LatticePolytope, Point, PointClass,
                       UnimodularAffineMap, content_gcd)
from .search import (SearchReport, SearchSpec, candidate_points,
                     classify_r2_witnesses, combinatorial_type,
                     extend_to_maximal, min_size_search)
from .sospoly import (GramSystem, SosVerdict, SparsePolynomial, build_hp,
                      constraints_satisfied, forced_gram, grid_min,
                      newton_cage, pair_sets, psd_check_exact, sos_verdict,
                      substitute_quadratic)

__version__ = "0.1.0"
