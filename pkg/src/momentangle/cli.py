"""Command line entry point: ``momentangle``.

Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import complex as cx
from .complex import format_simplex, parse_simplex
from .fillability import DEFAULT_BUDGET, is_fillable
from .hochster import bigraded_table, noncontractible_scan
from .homology import reduced_homology
from .stacked import recognize_stacked
from .verify import FixtureError, load_fixture, verify_paper


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _parse_set(text: str) -> tuple[int, ...]:
    try:
        return parse_simplex(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="momentangle", description="Invariants of simplicial complexes and moment-angle complexes.")
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("info", help="f-vector and missing faces")
    s.add_argument("file")

    s = sub.add_parser("homology", help="reduced integral homology")
    s.add_argument("file")
    s.add_argument("--subset", type=_parse_set, help="restrict to the full subcomplex on these vertices")
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("link", help="facets of the link of a simplex")
    s.add_argument("file")
    s.add_argument("--simplex", type=_parse_set, required=True)

    s = sub.add_parser("scan", help="full subcomplexes of a given size with nonvanishing reduced homology")
    s.add_argument("file")
    s.add_argument("--card", type=int, required=True)
    s.add_argument("--jobs", type=int, default=1)

    s = sub.add_parser("hochster", help="full-subcomplex table or Poincaré polynomial of Z_K")
    s.add_argument("file")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--poincare", action="store_true", help="print the Poincaré polynomial (default)")
    g.add_argument("--table", action="store_true", help="print the nonzero table entries as JSON")
    s.add_argument("--jobs", type=int, default=1)

    s = sub.add_parser("stacked", help="recognise a stacked sphere")
    s.add_argument("file")

    s = sub.add_parser("fillable", help="search for a filling by missing faces")
    s.add_argument("file")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    s = sub.add_parser("verify-paper", help="replay every finitely checkable claim on the bundled fixture")
    s.add_argument("--fixture", help="alternative fixture file")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--json", action="store_true")
    return p


def _run(args) -> int:
    if args.command == "verify-paper":
        report = verify_paper(load_fixture(args.fixture), jobs=args.jobs, budget=args.budget)
        if args.json:
            print(json.dumps(report.to_json(), indent=2, ensure_ascii=False))
        else:
            print(report.render())
        return 1 if report.status == "fail" else 0

    K = cx.load_complex(args.file)
    if args.command == "info":
        print(f"vertices: {' '.join(map(str, K.vertices))}")
        print(f"dimension: {K.dim}")
        print(f"f-vector: {tuple(K.f_vector)}")
        print(f"facets: {' '.join(format_simplex(f) for f in K.facets)}")
        print(f"missing faces: {' '.join(format_simplex(m) for m in cx.missing_faces(K))}")
    elif args.command == "homology":
        L = cx.full_subcomplex(K, args.subset) if args.subset is not None else K
        prof = reduced_homology(L)
        print(json.dumps(prof.to_json()) if args.json else prof)
    elif args.command == "link":
        print(" ".join(format_simplex(f) for f in cx.link(K, args.simplex).facets))
    elif args.command == "scan":
        for I, prof in noncontractible_scan(K, args.card, args.jobs):
            print(f"{format_simplex(I)}\t{prof}")
    elif args.command == "hochster":
        table = bigraded_table(K, args.jobs)
        if args.table:
            rows = [{"I": list(I), "homology": p.to_json()} for I, p in table.nonzero()]
            print(json.dumps(rows))
        else:
            print(table.poincare())
        if table.has_torsion:
            print("warning: torsion in the full-subcomplex table", file=sys.stderr)
    elif args.command == "stacked":
        cert = recognize_stacked(K)
        if cert is None:
            print("not stacked")
            return 1
        print(json.dumps(cert.to_json()))
    elif args.command == "fillable":
        w = is_fillable(K, args.budget)
        print(json.dumps(w.to_json()))
        return 0 if w.outcome != "not_shown" else 1
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except (OSError, ValueError, FixtureError, json.JSONDecodeError) as exc:
        print(f"momentangle: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
