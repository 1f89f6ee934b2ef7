"""Command-line entry point: ``charvar mhp``, ``charvar efree``, ``charvar check``.

Exit codes: 0 success, 2 usage error, 3 internal-consistency failure,
4 capacity limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import abelmhp, freegrp
from .check import SUITES, run_suites
from .combinat import parse_partition
from .errors import CapacityError, ConsistencyError, DomainError, StructureError
from .groups import GroupSpec

EXIT_OK, EXIT_USAGE, EXIT_CONSISTENCY, EXIT_CAPACITY = 0, 2, 3, 4

MHP_HELP = """\
Mixed Hodge polynomial of the character variety Hom(Z^r, G) // G.

For GL(n), SL(n) and Sp(n) this variety is irreducible, so the value is
that of the whole variety.  Sp(n) means the rank-n symplectic group
(Sp(2n, C) in matrix-size notation): Weyl group of order 2^n n!, maximal
torus of dimension n.  Results are computed in q = t*u*v; --vars tuv
expands them back into three variables.
"""

EFREE_HELP = """\
E-polynomial, in x = uv, of the GL(n), SL(n) or PGL(n) character variety
of the free group F_r: the irreducible locus, the whole variety, or the
stratum of a partition type given as "j^k" tokens, e.g. "1^2 2^1".
SL(n) and PGL(n) share the same values.
"""


def _positive(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _non_negative(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="charvar",
        description="Exact Hodge-theoretic invariants of character varieties.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mhp", help="mixed Hodge polynomial, free abelian group Z^r",
                       description=MHP_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--group", required=True, help="gl, sl or sp (sp is rank n)")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--r", type=_non_negative, required=True,
                   help="rank of Z^r; r = 0 gives the point, value 1")
    p.add_argument("--vars", choices=("q", "tuv"), default="q")
    p.add_argument("--specialize", choices=abelmhp.SPECIALIZATIONS,
                   help="emit the Poincare polynomial, E-polynomial or Euler characteristic")
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")

    e = sub.add_parser("efree", help="E-polynomial, free group F_r",
                       description=EFREE_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    e.add_argument("--group", required=True, help="gl, sl or pgl")
    e.add_argument("--n", type=_positive, required=True)
    e.add_argument("--r", type=_positive, required=True)
    kind = e.add_mutually_exclusive_group()
    kind.add_argument("--irr", action="store_true", help="irreducible locus")
    kind.add_argument("--total", action="store_true", help="whole variety (default)")
    kind.add_argument("--stratum", metavar="PARTITION", help='partition type, e.g. "1^2 2^1"')
    e.add_argument("--format", choices=("text", "json", "latex"), default="text")

    c = sub.add_parser("check", help="run the brute-force oracle suites")
    c.add_argument("--suite", choices=("all",) + SUITES, default="all")
    c.add_argument("--max-n", type=_positive, default=None,
                   help="lower every size cap to this value")
    c.add_argument("--json", action="store_true", help="machine-readable summary")
    return parser


def _emit(poly, fmt, meta):
    if fmt == "json":
        obj = dict(meta)
        obj.update(poly.to_json_obj())
        return json.dumps(obj)
    if fmt == "latex":
        return poly.to_latex()
    return poly.to_text()


def cmd_mhp(args):
    group = GroupSpec.parse(args.group, args.n)
    if group.family == "PGL":
        raise DomainError("mhp supports gl, sl and sp; PGL has no free-abelian engine")
    result = abelmhp.mhp(group, args.r)
    meta = {"group": str(group), "r": args.r}
    if args.specialize:
        poly = abelmhp.specialize(result, args.specialize)
        meta["specialization"] = args.specialize
    else:
        poly = result.poly_tuv if args.vars == "tuv" else result.poly_q
    return _emit(poly, args.format, meta)


def cmd_efree(args):
    group = GroupSpec.parse(args.group, args.n)
    if group.family == "Sp":
        raise DomainError("efree supports gl, sl and pgl")
    k = None
    if args.irr:
        kind = "irreducible"
    elif args.stratum is not None:
        kind = "stratum"
        k = parse_partition(args.stratum, args.n)
    else:
        kind = "total"
    report = freegrp.epoly(group, args.r, kind, k)
    meta = {"group": str(group), "r": args.r, "kind": kind}
    if k is not None:
        meta["stratum"] = str(k)
    return _emit(report.value, args.format, meta)


def cmd_check(args, out):
    results = run_suites(args.suite, args.max_n)
    ok = all(r.passed for r in results)
    if args.json:
        print(json.dumps({"passed": ok, "results": [r.to_json_obj() for r in results]}), file=out)
    else:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'}  {r.name}", file=out)
        failed = [r for r in results if not r.passed]
        if failed:
            print(json.dumps({"name": failed[0].name,
                              "counterexample": failed[0].counterexample}), file=out)
    return EXIT_OK if ok else EXIT_CONSISTENCY


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.command == "check":
            return cmd_check(args, out)
        text = cmd_mhp(args) if args.command == "mhp" else cmd_efree(args)
    except (DomainError, StructureError) as exc:
        print(f"charvar {args.command}: error: {exc}", file=err)
        return EXIT_USAGE
    except ConsistencyError as exc:
        print(f"charvar {args.command}: internal consistency failure: {exc}", file=err)
        return EXIT_CONSISTENCY
    except CapacityError as exc:
        print(f"charvar {args.command}: capacity exceeded: {exc}", file=err)
        return EXIT_CAPACITY
    print(text, file=out)
    return EXIT_OK


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
