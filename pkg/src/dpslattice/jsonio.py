"""JSON wire formats for polytopes, polynomials and reports.

Integers serialize as JSON numbers while |x| < 2^53 and as decimal strings
beyond that, so arbitrarily large exact coordinates survive any consumer.
Polynomial coefficients are always "p" or "p/q" strings, never floats.
Object keys are emitted sorted; element lists keep their own deterministic
order, so identical inputs produce byte-identical documents.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .checks import (CollinearTriple, DpsVerdict, Parallelogram, ParallelPair,
                     PairSumCollision)
from .construct import LiftCertificate
from .errors import DomainError
from .geometry import LatticePolytope, PointClass, UnimodularAffineMap
from .search import SearchReport
from .sospoly import GramSystem, SosVerdict, SparsePolynomial

SAFE_INT = 2 ** 53


def encode_int(x: int):
    return x if -SAFE_INT < x < SAFE_INT else str(x)


def decode_int(v) -> int:
    if isinstance(v, bool):
        raise DomainError("expected an integer, got a boolean")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        try:
            return int(v, 10)
        except ValueError as exc:
            raise DomainError(f"not a decimal integer: {v!r}") from exc
    raise DomainError(f"expected an integer, got {v!r}")


def encode_vector(v):
    return [encode_int(c) for c in v]


def decode_vector(v):
    if not isinstance(v, list):
        raise DomainError(f"expected a coordinate list, got {v!r}")
    return tuple(decode_int(c) for c in v)


def encode_fraction(c: Fraction) -> str:
    return str(Fraction(c))


def decode_fraction(v) -> Fraction:
    if isinstance(v, bool) or isinstance(v, float):
        raise DomainError(f"coefficients must be exact strings or integers, got {v!r}")
    try:
        return Fraction(v)
    except (ValueError, TypeError) as exc:
        raise DomainError(f"not an exact rational: {v!r}") from exc


# ---------------------------------------------------------------------------
# polytopes and maps


def polytope_to_obj(polytope: LatticePolytope, points=None) -> dict:
    pts = polytope.generators if points is None else tuple(points)
    return {"dim": polytope.dim, "points": [encode_vector(p) for p in pts]}


def polytope_from_obj(obj) -> LatticePolytope:
    if not isinstance(obj, dict) or "points" not in obj:
        raise DomainError('polytope JSON needs {"dim": n, "points": [[...], ...]}')
    points = [decode_vector(p) for p in obj["points"]]
    polytope = LatticePolytope(points)
    if "dim" in obj and decode_int(obj["dim"]) != polytope.dim:
        raise DomainError(f'declared dim {obj["dim"]} does not match the points')
    return polytope


def map_to_obj(m: UnimodularAffineMap) -> dict:
    return {"matrix": [encode_vector(row) for row in m.matrix],
            "translation": encode_vector(m.translation)}


def map_from_obj(obj) -> UnimodularAffineMap:
    return UnimodularAffineMap(tuple(decode_vector(r) for r in obj["matrix"]),
                               decode_vector(obj["translation"]))


def certificate_to_obj(cert: LiftCertificate) -> dict:
    return {"R": encode_int(cert.radius),
            "matrix": [encode_vector(row) for row in cert.matrix],
            "verified": cert.separation_checked}


# ---------------------------------------------------------------------------
# verdicts and witnesses


def witness_to_obj(witness) -> dict:
    if isinstance(witness, PairSumCollision):
        return {"kind": witness.kind,
                "pairs": [list(witness.first), list(witness.second)],
                "points": [encode_vector(p) for p in witness.points]}
    if isinstance(witness, (CollinearTriple, Parallelogram)):
        return {"kind": witness.kind,
                "indices": list(witness.indices),
                "points": [encode_vector(p) for p in witness.points]}
    if isinstance(witness, ParallelPair):
        return {"kind": witness.kind,
                "pairs": [list(witness.first), list(witness.second)],
                "points": [encode_vector(p) for p in witness.points]}
    raise DomainError(f"unknown witness type {type(witness).__name__}")


def check_result_to_obj(verdict: DpsVerdict, maximal: bool) -> dict:
    return {"dps": verdict.is_dps,
            "maximal": maximal,
            "witness": witness_to_obj(verdict.witness) if verdict.witness else None,
            "checker": verdict.checker}


# ---------------------------------------------------------------------------
# polynomials and Gram systems


def polynomial_to_obj(p: SparsePolynomial) -> dict:
    return {"nvars": p.nvars,
            "terms": [{"exp": encode_vector(e), "coef": encode_fraction(c)}
                      for e, c in p.terms.items()]}


def polynomial_from_obj(obj) -> SparsePolynomial:
    if not isinstance(obj, dict) or "nvars" not in obj or "terms" not in obj:
        raise DomainError('polynomial JSON needs {"nvars": n, "terms": [...]}')
    terms = []
    for term in obj["terms"]:
        terms.append((decode_vector(term["exp"]), decode_fraction(term["coef"])))
    return SparsePolynomial(decode_int(obj["nvars"]), terms)


def gram_to_obj(system: GramSystem) -> dict:
    matrix = None
    if system.forced_matrix is not None:
        matrix = [[encode_fraction(c) for c in row] for row in system.forced_matrix]
    return {"support": [encode_vector(v) for v in system.support],
            "status": system.status,
            "matrix": matrix,
            "uncovered": [encode_vector(u) for u in system.uncovered],
            "pair_sets": [{"sum": encode_vector(u), "pairs": [list(ij) for ij in pairs]}
                          for u, pairs in system.pair_sets.items()]}


def sos_verdict_to_obj(verdict: SosVerdict) -> dict:
    squares = None
    if verdict.squares is not None:
        squares = [{"weight": encode_fraction(w), "poly": polynomial_to_obj(g)}
                   for w, g in verdict.squares]
    return {"kind": verdict.kind, "count": verdict.count,
            "squares": squares, "reason": verdict.reason}


# ---------------------------------------------------------------------------
# search reports and classification


def search_report_to_obj(report: SearchReport) -> dict:
    return {"witnesses": [polytope_to_obj(w, points=w.lattice_points)
                          for w in report.witnesses],
            "nodes": report.nodes_explored,
            "pruned": dict(sorted(report.pruned_by.items())),
            "elapsed_ms": int(report.elapsed * 1000)}


def classification_to_obj(labels: dict) -> dict:
    counts = {cls.value: 0 for cls in PointClass}
    rows = []
    for point, label in sorted(labels.items()):
        rows.append({"point": encode_vector(point), "label": label.value})
        counts[label.value] += 1
    return {"points": rows, "counts": counts}


# ---------------------------------------------------------------------------
# document rendering


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _is_point_list(value) -> bool:
    return (isinstance(value, list) and value
            and all(isinstance(p, list) and p
                    and all(isinstance(c, (int, str)) and not isinstance(c, bool) for c in p)
                    for p in value))


def _format_value(value):
    if _is_point_list(value):
        return ", ".join("(" + ", ".join(str(c) for c in p) + ")" for p in value)
    if isinstance(value, list):
        return ", ".join(str(_format_value(v)) for v in value) if value else "none"
    if value is None:
        return "none"
    return value


def to_text(obj, indent: int = 0) -> str:
    """Aligned plain-text rendering with point lists in tuple style."""
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for key, value in obj.items():
            if isinstance(value, dict) or (isinstance(value, list)
                                           and value and isinstance(value[0], dict)):
                lines.append(f"{pad}{key}:")
                lines.append(to_text(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_format_value(value)}")
    elif isinstance(obj, list):
        for value in obj:
            if isinstance(value, dict):
                lines.append(to_text(value, indent))
                lines.append("")
            else:
                lines.append(f"{pad}{_format_value(value)}")
        while lines and lines[-1] == "":
            lines.pop()
    else:
        lines.append(f"{pad}{_format_value(obj)}")
    return "\n".join(lines)
