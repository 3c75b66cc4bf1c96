"""Command line entry point: ``spinbundles <command> [options]``."""

from __future__ import annotations

import argparse
import sys

from . import report
from .exact import DEFAULT_SEED
from .ktheory import ConstraintError

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _common(p: argparse.ArgumentParser):
    p.add_argument("--output", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--samples", type=int, default=20, help="random exact samples per check (default 20)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spinbundles", description="Exact checks for spin bundles over CP^3.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("clifford", help="irreducible Cl_n modules and the even-part isomorphism")
    p.add_argument("n", type=int)
    _common(p)

    p = sub.add_parser("stabilizer", help="stabilizer of a set of omega forms in SU(4)")
    p.add_argument("indices", help="comma separated form indices, e.g. 1,2,6")
    _common(p)

    p = sub.add_parser("lemma-cohomo", help="characteristic class identities for Spin(n), 3 <= n <= 6")
    p.add_argument("n", type=int)
    p.add_argument("--printed-weights", action="store_true", help="n = 6: use the weight list with the repeated entry")
    _common(p)

    p = sub.add_parser("classify", help="count Spin(n) bundles over CP^3 with given p1 (and e)")
    p.add_argument("n", type=int)
    p.add_argument("p1", type=int, help="coefficient of x^2 in p1")
    p.add_argument("--euler", type=int, default=None,
                   help="Euler class coefficient (of x for n=2, x^2 for n=4, x^3 for n=6)")
    _common(p)

    p = sub.add_parser("embed", help="certificate for RP^7 in R^11")
    p.add_argument("--tamper", choices=("other-candidate",), default=None)
    _common(p)

    p = sub.add_parser("all", help="run every suite")
    p.add_argument("--typo-weights", action="store_true", help="use the printed pi_6 weights in the n = 6 check")
    _common(p)
    return parser


def cmd_clifford(args) -> report.Report:
    if not 1 <= args.n <= report.MAX_CLIFFORD_N:
        raise UsageError(f"n must satisfy 1 <= n <= {report.MAX_CLIFFORD_N}, got {args.n}")
    return report.clifford_report(args.n, args.seed, args.samples)


def cmd_stabilizer(args) -> report.Report:
    try:
        idx = report.parse_indices(args.indices)
    except ValueError as exc:
        raise UsageError(str(exc))
    return report.stabilizer_report(idx, args.seed, args.samples)


def cmd_lemma_cohomo(args) -> report.Report:
    if args.n not in (3, 4, 5, 6):
        raise UsageError(f"n must be 3, 4, 5 or 6, got {args.n}")
    if args.printed_weights and args.n != 6:
        raise UsageError("--printed-weights applies to n = 6 only")
    return report.lemma_cohomo_report(args.n, args.seed, printed_weights=args.printed_weights)


def cmd_classify(args) -> report.Report:
    try:
        return report.classify_report(args.n, args.p1, args.euler, args.seed)
    except (ConstraintError, ValueError) as exc:
        raise UsageError(str(exc))


def cmd_embed(args) -> report.Report:
    return report.embed_report(tamper=args.tamper == "other-candidate", seed=args.seed)


def cmd_all(args) -> report.Report:
    return report.all_report(args.seed, args.samples, typo_weights=args.typo_weights)


COMMANDS = {
    "clifford": cmd_clifford,
    "stabilizer": cmd_stabilizer,
    "lemma-cohomo": cmd_lemma_cohomo,
    "classify": cmd_classify,
    "embed": cmd_embed,
    "all": cmd_all,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    if getattr(args, "samples", 1) < 0:
        print("error: --samples must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    try:
        rep = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(rep.to_json() if args.output == "json" else rep.to_text())
    return EXIT_PASS if rep.verdict == report.PASS else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
