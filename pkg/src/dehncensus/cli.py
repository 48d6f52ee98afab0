"""Command-line interface.

Subcommands:
  stats          type table and e-histogram for a census
  check          run the consistency suites; exit 1 when any check fails
  slopes         list short slopes for one cusp lattice
  normalize      normal form and invariants of a description
  certify-graph  minimality report for a graph description file

Exit codes: 0 success / all checks pass, 1 check failures or a failed
certification, 2 input errors.
"""

import argparse
import json
import sys

from . import analytics, census_io
from .cusp_geometry import CuspTranslations, enumerate_short_slopes, slope_length
from .descriptions import Graph, Seifert, normalize_description
from .graph_manifold import certify_minimal
from .seifert import (
    Pi1Class,
    UnsupportedTriple,
    euler_number,
    first_homology,
    pi1_class,
    spherical_order,
)
from .taxonomy import resolve_type


def _load(args) -> census_io.Census:
    return census_io.load_census(args.manifolds, args.fillings)


def _add_census_args(parser):
    parser.add_argument("--manifolds", required=True, help="manifolds.csv path")
    parser.add_argument("--fillings", required=True, help="fillings.csv path")


def _cmd_stats(args) -> int:
    census = _load(args)
    table = analytics.type_table(census)
    hist = analytics.e_histogram(census)
    knots = sum(r.knot_exterior for r in census.manifolds.values())
    if args.json:
        print(json.dumps({
            "record": "summary",
            "manifolds": len(census.manifolds),
            "fillings": len(census.fillings),
            "knot_exteriors": knots,
        }))
        for label, count in table.items():
            print(json.dumps({"record": "type_count", "type": label.value, "fillings": count}))
        for e, count in hist.items():
            print(json.dumps({"record": "e_histogram", "e": e, "manifolds": count}))
        return 0
    print(f"manifolds: {len(census.manifolds)}")
    print(f"fillings: {len(census.fillings)}")
    print(f"knot exteriors: {knots}")
    print("\ntype table:")
    for label, count in table.items():
        print(f"  {label.value:<16} {count}")
    print("\ne histogram:")
    for e, count in hist.items():
        print(f"  e={e:<3} {count}")
    return 0


def _cmd_check(args) -> int:
    census = _load(args)
    if args.suite == "slopes":
        results = analytics.slope_suite(census)
    else:
        results = analytics.conjecture_suite(census)
        if args.suite == "knots":
            results = [r for r in results if r.check_id.startswith("knots.")]
        elif args.suite == "sums":
            results = [r for r in results if r.check_id.startswith("sums.")]
        elif args.suite == "all":
            results = results + analytics.slope_suite(census)
    for r in results:
        if args.json:
            print(json.dumps({
                "record": "check",
                "id": r.check_id,
                "passed": r.passed,
                "observed": _jsonable(r.observed),
                "expected": _jsonable(r.expected),
                "witnesses": [list(w) for w in r.witnesses],
            }))
        else:
            print(r.line())
    return 0 if all(r.passed for r in results) else 1


def _jsonable(value):
    try:
        json.dumps(value)
        return value
    except TypeError:
        return str(value)


def _cmd_slopes(args) -> int:
    t = CuspTranslations(complex(args.m_re, args.m_im), complex(args.l_re, args.l_im))
    for s in enumerate_short_slopes(t, args.bound):
        print(f"{s}  length={slope_length(t, s):.6f}")
    return 0


def _cmd_normalize(args) -> int:
    d = normalize_description(census_io.parse_description(args.description))
    print(census_io.render_description(d))
    print(f"type: {resolve_type(d).value}")
    if isinstance(d, Seifert) and d.data.is_closed:
        sd = d.data
        print(f"euler number: {euler_number(sd)}")
        print(f"H1: {first_homology(sd)}")
        cls = pi1_class(sd)
        print(f"pi1: {cls.value}")
        if cls is Pi1Class.FINITE_NONCYCLIC:
            try:
                print(f"pi1 order: {spherical_order(sd)}")
            except UnsupportedTriple:
                pass
    return 0


def _cmd_certify(args) -> int:
    with open(args.file, encoding="utf-8") as handle:
        text = handle.read().strip()
    d = census_io.parse_description(text)
    if not isinstance(d, Graph):
        raise ValueError("certify-graph expects a GRAPH{...} description")
    report = certify_minimal(d.data)
    for line in report.lines():
        print(line)
    return 0 if report.passed else 1


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="dehncensus",
        description="Analytics for censuses of exceptional Dehn fillings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="type table and e-histogram")
    _add_census_args(p)
    p.add_argument("--json", action="store_true", help="line-delimited JSON output")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("check", help="run the consistency suites")
    _add_census_args(p)
    p.add_argument("--suite", choices=["all", "knots", "sums", "slopes"], default="all")
    p.add_argument("--json", action="store_true", help="line-delimited JSON output")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("slopes", help="list short slopes of one cusp lattice")
    p.add_argument("--m-re", type=float, required=True)
    p.add_argument("--m-im", type=float, required=True)
    p.add_argument("--l-re", type=float, required=True)
    p.add_argument("--l-im", type=float, required=True)
    p.add_argument("--bound", type=float, default=6.0)
    p.set_defaults(func=_cmd_slopes)

    p = sub.add_parser("normalize", help="normal form and invariants of a description")
    p.add_argument("description")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("certify-graph", help="minimality report for a graph description")
    p.add_argument("file")
    p.set_defaults(func=_cmd_certify)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
