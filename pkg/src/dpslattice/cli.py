"""Command-line front end.

Every subcommand reads and writes the JSON formats from jsonio (or an
aligned plain-text rendering with --format text) and exits 0 on success,
including negative results such as an empty witness list; domain errors
exit 1 with a message naming the violated precondition; usage errors exit
2 via argparse.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import golden, jsonio
from .checks import check_direction, check_geometric, check_pairsum
from .construct import lift, maximal_dps_with_certificate, reduce_coordinates
from .errors import DomainError
from .geometry import LatticePolytope
from .search import SearchSpec, extend_to_maximal, min_size_search
from .sospoly import build_hp, forced_gram, sos_verdict

_CHECKERS = {"pairsum": check_pairsum, "geometric": check_geometric,
             "direction": check_direction}


def _read_input(args) -> dict:
    if args.input == "-":
        raw = sys.stdin.read()
    else:
        try:
            with open(args.input, "r", encoding="utf-8") as handle:
                raw = handle.read()
        except OSError as exc:
            raise DomainError(f"cannot read input: {exc}") from exc
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise DomainError(f"input is not valid JSON: {exc}") from exc


def _load_polytope(args) -> LatticePolytope:
    return jsonio.polytope_from_obj(_read_input(args))


def cmd_enumerate(args) -> dict:
    polytope = _load_polytope(args)
    return jsonio.polytope_to_obj(polytope, points=polytope.lattice_points)


def cmd_check(args) -> dict:
    polytope = _load_polytope(args)
    points = polytope.lattice_points
    verdict = _CHECKERS[args.checker](points)
    # the three checkers are equivalent, so any of them decides maximality
    maximal = verdict.is_dps and len(points) == 2 ** polytope.dim
    return jsonio.check_result_to_obj(verdict, maximal)


def cmd_build(args) -> dict:
    polytope, certificate = maximal_dps_with_certificate(args.dim, base3=args.base)
    return {"polytope": jsonio.polytope_to_obj(polytope,
                                               points=polytope.lattice_points),
            "certificate": jsonio.certificate_to_obj(certificate) if certificate else None}


def cmd_lift(args) -> dict:
    certificate = lift(_load_polytope(args))
    return {"polytope": jsonio.polytope_to_obj(certificate.polytope,
                                               points=certificate.polytope.lattice_points),
            "certificate": jsonio.certificate_to_obj(certificate)}


def cmd_reduce(args) -> dict:
    reduced, applied = reduce_coordinates(_load_polytope(args))
    return {"polytope": jsonio.polytope_to_obj(reduced,
                                               points=reduced.lattice_points),
            "size": reduced.size(),
            "map": jsonio.map_to_obj(applied)}


def cmd_search(args) -> dict:
    spec = SearchSpec(dim=args.dim, max_size=args.max_size,
                      all_witnesses=args.all, symmetry_reduction=args.symmetry,
                      thread_count=args.threads)
    return jsonio.search_report_to_obj(min_size_search(spec))


def cmd_classify(args) -> dict:
    return jsonio.classification_to_obj(_load_polytope(args).classify_lattice_points())


def cmd_hp(args) -> dict:
    return jsonio.polynomial_to_obj(build_hp(_load_polytope(args)))


def cmd_gram(args) -> dict:
    poly = jsonio.polynomial_from_obj(_read_input(args))
    system = forced_gram(poly)
    return {"gram": jsonio.gram_to_obj(system),
            "verdict": jsonio.sos_verdict_to_obj(sos_verdict(poly))}


def cmd_example(args) -> dict:
    if args.number == 4:
        poly = golden.sextic_gap()
        return {"polynomial": jsonio.polynomial_to_obj(poly),
                "verdict": jsonio.sos_verdict_to_obj(sos_verdict(poly))}
    return jsonio.polytope_to_obj(golden.polytope_example(args.number))


def cmd_extend(args) -> dict:
    polytope = _load_polytope(args)
    extended = extend_to_maximal(polytope, args.region)
    added = None
    if extended is not None:
        before = set(polytope.lattice_points)
        added = [jsonio.encode_vector(p) for p in extended.lattice_points
                 if p not in before]
    return {"region": args.region,
            "extended": (jsonio.polytope_to_obj(extended,
                                                points=extended.lattice_points)
                         if extended else None),
            "added": added}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dps",
        description="Exact tools for distinct pair-sum lattice polytopes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text, *, with_input=False):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        p.add_argument("--format", choices=("json", "text"), default="json")
        if with_input:
            p.add_argument("--input", required=True,
                           help="path to a JSON file, or - for stdin")
        return p

    add("enumerate", cmd_enumerate, "list the lattice points of a polytope",
        with_input=True)

    p = add("check", cmd_check, "test the distinct pair-sum property",
            with_input=True)
    p.add_argument("--checker", choices=sorted(_CHECKERS), default="pairsum")

    p = add("build", cmd_build, "construct a maximal dps polytope")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--base", choices=("paper", "lift"), default="paper",
                   help="choice of the dimension-3 base polytope")

    add("lift", cmd_lift, "raise a maximal dps polytope one dimension",
        with_input=True)
    add("reduce", cmd_reduce, "shrink coordinates by unimodular shears",
        with_input=True)

    p = add("search", cmd_search, "exhaustive minimal-size witness search")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--max-size", type=int, required=True, dest="max_size")
    p.add_argument("--all", action="store_true",
                   help="collect every witness instead of stopping at the first")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--symmetry", action="store_true",
                   help="keep only permutation-canonical witnesses")

    add("classify", cmd_classify, "label lattice points as vertex/boundary/interior",
        with_input=True)
    add("hp", cmd_hp, "canonical sum-of-squares polynomial of a polytope",
        with_input=True)
    add("gram", cmd_gram, "forced Gram matrix and verdict for a polynomial",
        with_input=True)

    p = add("example", cmd_example, "emit bundled example data")
    p.add_argument("number", type=int, choices=(1, 2, 3, 4))

    p = add("extend", cmd_extend, "search for a maximal superset in a box",
            with_input=True)
    p.add_argument("--region", type=int, required=True,
                   help="candidate coordinates are bounded by this absolute value")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        obj = args.handler(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "text":
        sys.stdout.write(jsonio.to_text(obj) + "\n")
    else:
        sys.stdout.write(jsonio.dumps(obj))
    return 0


if __name__ == "__main__":
    sys.exit(main())
