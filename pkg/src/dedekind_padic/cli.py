"""Command line interface.  Every command prints line-delimited JSON on stdout.

Exit codes: 0 success, 1 a scan found a counterexample, 2 invalid input,
3 target not approximable.
"""

from __future__ import annotations

import argparse
import json
import sys

from .approximate import Target, approximate
from .arith import parse_rational, prime_power_base
from .congruences import eq216_check, lemma1_scan
from .dedekind import DedekindPair, dedekind_fast, dedekind_naive
from .errors import DedekindError, InvalidArgument, NotApproximable, TheoremViolation
from .families import FamilyParams, family_values
from .obstruction import scan

EXIT_OK = 0
EXIT_FOUND = 1
EXIT_INVALID = 2
EXIT_NOT_APPROXIMABLE = 3


def _emit(record):
    print(json.dumps(record), flush=True)


def cmd_sum(args):
    pair = DedekindPair(args.m, args.n)
    s = dedekind_naive(pair) if args.naive else dedekind_fast(pair)
    _emit({
        "m": str(args.m),
        "n": str(pair.n),
        "S": str(s),
        "nS": str(pair.n * s),
        "method": "naive" if args.naive else "fast",
    })
    return EXIT_OK


def cmd_approx(args):
    target = Target(args.prime, parse_rational(args.target), args.precision)
    try:
        witness = approximate(target)
    except NotApproximable:
        _emit({"error": "NotApproximable", "reason": "Theorem 1"})
        return EXIT_NOT_APPROXIMABLE
    _emit(witness.as_dict())
    return EXIT_OK


def _prime_powers(limit):
    for q in range(2, limit + 1):
        try:
            yield q, prime_power_base(q)[0]
        except InvalidArgument:
            continue


def cmd_verify(args):
    if args.max_n < 2:
        raise InvalidArgument(f"--max-n must be >= 2, got {args.max_n}")
    pairs = failures = 0
    for report in lemma1_scan(args.max_n):
        pairs += 1
        if not report.holds:
            failures += 1
            _emit(report.as_dict())
    checked = eq_failures = 0
    for q, p in _prime_powers(args.max_n):
        for r in range(1, q):
            if r % p:
                checked += 1
                if not eq216_check(r, q):
                    eq_failures += 1
                    _emit({"q": q, "r": r, "eq216": False})
    ok = failures == 0 and eq_failures == 0
    _emit({
        "max_n": args.max_n,
        "pairs": pairs,
        "lemma1_failures": failures,
        "eq216_checked": checked,
        "eq216_failures": eq_failures,
        "holds": "all" if ok else "not all",
    })
    return EXIT_OK if ok else EXIT_FOUND


def cmd_obstruct(args):
    if args.max_n < 2:
        raise InvalidArgument(f"--max-n must be >= 2, got {args.max_n}")
    try:
        report = scan(args.max_n)
    except TheoremViolation as exc:
        pair = exc.pair
        _emit({"nmax": args.max_n, "violations": 1, "m": str(pair.m), "n": str(pair.n)})
        return EXIT_FOUND
    _emit(report.as_dict())
    return EXIT_OK


def cmd_family(args):
    if args.count < 1:
        raise InvalidArgument(f"--count must be >= 1, got {args.count}")
    params = FamilyParams(args.q, args.r)
    for member in family_values(params, args.count):
        _emit(member.as_dict())
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="dedekind-padic",
        description="Exact Dedekind sums and their p-adic approximation properties.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sum", help="evaluate S(m, n) = 12 s(m, n)")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--naive", action="store_true", help="use the defining sum (n <= 10^5)")
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("approx", help="find (m, n) with v_p(S(m, n) - target) >= precision")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--target", required=True, help="rational, e.g. -3/7")
    p.add_argument("--precision", type=int, required=True)
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("verify", help="check the congruences of n*S(m, n) for n <= max-n")
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("obstruct", help="scan for Dedekind sums near 2-adic or 3-adic units")
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=cmd_obstruct)

    p = sub.add_parser("family", help="list members of the family n = q(m^2 + 1)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.set_defaults(func=cmd_family)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidArgument as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except DedekindError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_FOUND


if __name__ == "__main__":
    sys.exit(main())
