"""Command line interface.

Subcommands mirror the library: validate a datum, print its invariants,
compare two data, decide extendability, enumerate classes at a genus,
and answer lens-space embedding queries. Data are passed inline as JSON
or as a path to a JSON file. Exit codes: 0 for success (and for a
positive predicate), 1 for a negative predicate, 2 for bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .enumeration import enumerate_extendable
from .extendability import ALL_TYPES, CHECKS, classify_all
from .invariants import are_conjugate, conjugacy_invariant, same_cyclic_group
from .lens import (
    LensSpace,
    admits_genus3,
    admits_klein_bottle,
    admits_projective_plane,
    core_bounds,
    lens_homeomorphic,
    torsion_image,
)
from .orbifold import euler_genus, parse_datum, validate


def _read_datum(text):
    if text.lstrip().startswith("{"):
        return parse_datum(text)
    try:
        with open(text, encoding="utf-8") as fh:
            return parse_datum(fh.read())
    except OSError as exc:
        raise ValueError(f"cannot read datum file: {exc}") from None


def _datum_args(sub):
    sub.add_argument("datum", nargs="?", help="inline JSON or a file path")
    sub.add_argument(
        "--datum", dest="datum_opt", metavar="JSON", help="datum as inline JSON"
    )


def _resolve_datum(args, parser):
    given = [v for v in (args.datum, args.datum_opt) if v is not None]
    if len(given) != 1:
        parser.error("give the datum either inline or via --datum")
    return _read_datum(given[0])


def _cmd_validate(args, parser):
    problems = validate(_resolve_datum(args, parser))
    if problems:
        for line in problems:
            print(line)
        return 1
    print("ok")
    return 0


def _cmd_invariants(args, parser):
    d = _resolve_datum(args, parser)
    if validate(d):
        raise ValueError("invalid datum")
    out = conjugacy_invariant(d).to_dict()
    out["genus"] = euler_genus(d)
    print(json.dumps(out, sort_keys=True))
    return 0


def _cmd_conjugate(args, parser):
    a, b = _read_datum(args.a), _read_datum(args.b)
    same = same_cyclic_group(a, b) if args.group else are_conjugate(a, b)
    print("true" if same else "false")
    return 0 if same else 1


def _cmd_extendable(args, parser):
    d = _resolve_datum(args, parser)
    if validate(d):
        raise ValueError("invalid datum")
    if args.type:
        verdict = CHECKS[args.type](d)
        print("true" if verdict.extendable else "false")
        return 0 if verdict.extendable else 1
    genus = euler_genus(d)
    kinds = classify_all(d)
    out = {"genus": genus, "types": sorted(kinds)}
    if genus > 0:
        out["verdicts"] = {k: CHECKS[k](d).witness for k in sorted(kinds)}
    print(json.dumps(out, sort_keys=True))
    return 0


_ROW_FIELDS = ("n", "h", "b", "s", "t", "p", "q", "l", "g")


def _cmd_enumerate(args, parser):
    n_range = range(1, args.max_order + 1) if args.max_order else None
    rows = enumerate_extendable(args.genus, args.type, n_range)
    if args.format == "json":
        payload = []
        for row in rows:
            item = {"type": row.kind}
            for name in _ROW_FIELDS:
                value = getattr(row, name)
                if value is not None:
                    item[name] = value
            payload.append(item)
        print(json.dumps(payload, sort_keys=True))
        return 0
    print("\t".join(("type",) + _ROW_FIELDS))
    for row in rows:
        values = (getattr(row, name) for name in _ROW_FIELDS)
        cells = [row.kind] + ["" if v is None else str(v) for v in values]
        print("\t".join(cells))
    return 0


def _cmd_lens(args, parser):
    space = LensSpace(args.l, args.m)
    query = args.query
    if query.startswith("homeo:"):
        try:
            l2, m2 = (int(x) for x in query[len("homeo:") :].split(","))
        except ValueError:
            raise ValueError("homeo query takes two integers: homeo:L,M") from None
        ok = lens_homeomorphic(space, LensSpace(l2, m2))
    elif query == "pp":
        ok = admits_projective_plane(space)
    elif query == "klein":
        ok = admits_klein_bottle(space)
    elif query == "genus3":
        print(admits_genus3(space))
        return 0
    elif query == "torsion":
        print(int(torsion_image(space)))
        return 0
    elif query == "core":
        print(json.dumps(core_bounds(space), sort_keys=True))
        return 0
    else:
        raise ValueError("unknown query")
    print("true" if ok else "false")
    return 0 if ok else 1


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="symx",
        description="Periodic symmetries of closed orientable surfaces: "
        "conjugacy, sphere extendability, enumeration, lens embeddings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a datum and list violations")
    _datum_args(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("invariants", help="print the conjugacy invariant as JSON")
    _datum_args(p)
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("conjugate", help="decide conjugacy of two data")
    p.add_argument("a", help="first datum, inline JSON or a file path")
    p.add_argument("b", help="second datum, inline JSON or a file path")
    p.add_argument(
        "--group",
        action="store_true",
        help="compare up to power twist (same cyclic group)",
    )
    p.set_defaults(func=_cmd_conjugate)

    p = sub.add_parser("extendable", help="decide sphere extendability")
    _datum_args(p)
    p.add_argument("--type", choices=ALL_TYPES, help="single type verdict")
    p.set_defaults(func=_cmd_extendable)

    p = sub.add_parser("enumerate", help="list extendable classes at a genus")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--type", choices=ALL_TYPES, required=True)
    p.add_argument(
        "--max-order", type=int, help="restrict the symmetry order to 1..N"
    )
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("lens", help="lens space embedding queries")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument(
        "--query",
        required=True,
        help="homeo:L,M | pp | klein | genus3 | torsion | core",
    )
    p.set_defaults(func=_cmd_lens)
    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, parser)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 0
    except ValueError as exc:
        print(exc, file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
