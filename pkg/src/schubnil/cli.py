"""Command-line front end: orbit tables, small weights, cell membership,
projections, the verification harness, fibers, and duality tables.

All output is deterministic given the arguments and the seed.  JSON is
exchanged on stdin/stdout or through --in/--out; DOT text is emitted for
Hasse diagrams.  Exit codes: 0 success, 1 verification failure, 2
malformed input.
"""
from __future__ import annotations

import argparse
import json
import sys

from .correspondence import (
    duality_dims,
    fiber_contains,
    fiber_zero_profile,
    verify_table,
)
from .exactlinalg import QMatrix, TwistedCase, parse_twisted_case
from .grassmannian import LaurentMatrix, cell_of, iota, pi
from .partitions import PairCase, classify_orbits, hasse_dot, orbit_dim
from .weights import HType, enumerate_small


def _read_json(path: str | None):
    if path is None or path == "-":
        return json.load(sys.stdin)
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _write(text: str, path: str | None):
    if path is None or path == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_orbits(args) -> int:
    case = PairCase(args.case, args.n)
    for d in classify_orbits(case):
        print(f"{d.label()}  dim {orbit_dim(d)}")
    print()
    print(hasse_dot(case))
    return 0


def _cmd_hasse(args) -> int:
    print(hasse_dot(PairCase(args.case, args.n)))
    return 0


def _cmd_small_weights(args) -> int:
    ht = HType(args.htype, args.rank)
    out = [w.to_json() for w in enumerate_small(ht)]
    _write(json.dumps(out, indent=2), args.out)
    return 0


def _cmd_cell_of(args) -> int:
    case = parse_twisted_case(args.case, args.rank)
    g = LaurentMatrix.from_json(_read_json(args.infile))
    lam = cell_of(case, g)
    _write(json.dumps(lam.to_json()), args.out)
    return 0


def _cmd_pi(args) -> int:
    g = LaurentMatrix.from_json(_read_json(args.infile))
    _write(json.dumps(pi(g).to_json()), args.out)
    return 0


def _cmd_iota(args) -> int:
    g = LaurentMatrix.from_json(_read_json(args.infile))
    _write(json.dumps(iota(g).to_json()), args.out)
    return 0


def _cmd_verify_table(args) -> int:
    case = parse_twisted_case(args.case, args.rank)
    report = verify_table(case, seed=args.seed, conjugations=args.conjugations)
    _write(json.dumps(report.to_json(), indent=2), args.out)
    for row in report.rows:
        status = "ok" if row.passed else "FAIL"
        line = f"{status}  {row.lam}  branch={row.branch or '-'}  {row.orbit.label()}"
        if row.note:
            line += f"  [{row.note}]"
        print(line, file=sys.stderr)
    return 0 if report.passed else 1


def _cmd_fiber(args) -> int:
    case = parse_twisted_case(args.case, args.rank)
    if args.zero_profile:
        orbit, dim, note = fiber_zero_profile(case)
        out = {"orbit": orbit.to_json(), "dim": dim, "note": note}
        _write(json.dumps(out, indent=2), args.out)
        return 0
    if not args.x or not args.z:
        raise SystemExit("fiber needs --x and --z (or --zero-profile)")
    x = QMatrix.from_json(_read_json(args.x))
    z = QMatrix.from_json(_read_json(args.z))
    contains = fiber_contains(case, x, z)
    _write(json.dumps({"contains": contains}), args.out)
    return 0


def _cmd_duality(args) -> int:
    table = duality_dims(args.n)
    _write(json.dumps(table, indent=2), args.out)
    return 0 if all(row["match"] for row in table) else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="schubnil")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbits", help="list nilpotent orbits with dimensions and DOT Hasse diagram")
    p.add_argument("--case", required=True, choices=["sympA", "orthoddA", "orthevenA", "lieSp", "lieSOodd"])
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=_cmd_orbits)

    p = sub.add_parser("hasse", help="DOT Hasse diagram of the orbit closure order")
    p.add_argument("--case", required=True, choices=["sympA", "orthoddA", "orthevenA", "lieSp", "lieSOodd"])
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=_cmd_hasse)

    p = sub.add_parser("small-weights", help="list all small dominant weights")
    p.add_argument("--htype", required=True, choices=["B", "C"])
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_small_weights)

    p = sub.add_parser("cell-of", help="cell of a loop-group element (JSON in)")
    p.add_argument("--case", required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--in", dest="infile", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_cell_of)

    p = sub.add_parser("pi", help="t^-1 coefficient of a normalized element (JSON in)")
    p.add_argument("--in", dest="infile", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_pi)

    p = sub.add_parser("iota", help="the loop anti-involution g(t) -> g(-t)^{-1} (JSON in)")
    p.add_argument("--in", dest="infile", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_iota)

    p = sub.add_parser("verify-table", help="run the cell/orbit verification harness")
    p.add_argument("--case", required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--seed", type=int, default=0, help="seed for the random conjugations")
    p.add_argument("--conjugations", type=int, default=20)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_verify_table)

    p = sub.add_parser("fiber", help="fiber membership / fiber-over-zero profile")
    p.add_argument("--case", required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--x", default=None)
    p.add_argument("--z", default=None)
    p.add_argument("--zero-profile", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_fiber)

    p = sub.add_parser("duality", help="matching orbit dimensions across dual families")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_duality)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, KeyError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
