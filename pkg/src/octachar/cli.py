"""Single command-line entry point: `octachar <subcommand> ...`.

Exit codes: 0 on success / verification pass, 1 on a failed verification or
counterexample, 2 on bad arguments or malformed literals.  Randomized
verification commands print their seed in the report header.  `--jobs` (or the
OCTACHAR_JOBS environment variable) caps worker processes where a command
parallelizes over partitions.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .partitions import (
    Partition,
    PartitionParseError,
    format_partition,
    parse_partition,
    partitions_of,
)
from .characters import mn_character, character_table
from .hyperoctahedral import (
    basechange,
    format_bipartition,
    norm,
    parse_bipartition,
)
from .symfunc import (
    SweepFailure,
    factorization_even_sweep,
    factorization_odd_sweep,
    frobenius_sweep,
    schur_eval,
)
from .verify import build_table, dimension_match, main_theorem_sweep, sign_census


def _jobs_value(value) -> int:
    jobs = int(value)
    if jobs < 1:
        raise argparse.ArgumentTypeError("jobs must be at least 1")
    return jobs


def _default_jobs() -> int:
    env = os.environ.get("OCTACHAR_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="octachar",
        description="Exact symmetric-group / hyperoctahedral character computations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("char", help="character value of an irreducible at a class")
    p.add_argument("lam", help="partition literal, e.g. [3,2,1^4]")
    p.add_argument("rho", help="cycle type literal, e.g. [2^4]")

    p = sub.add_parser("chartable", help="full character table of S_m as TSV")
    p.add_argument("m", type=int)

    p = sub.add_parser("basechange", help="partition attached to a bipartition")
    p.add_argument("pair", help="bipartition literal, e.g. ([2,1]|[1])")
    p.add_argument("--target", choices=("even", "odd"), required=True)

    p = sub.add_parser("norm", help="halve an even-cycle class down to B_n")
    p.add_argument("w", help="cycle type literal, e.g. [4,2,2]")
    p.add_argument("--target", choices=("even", "odd"))

    p = sub.add_parser("schur", help="exact Schur polynomial value at a point")
    p.add_argument("lam")
    p.add_argument("--at", required=True, help="comma-separated rationals, e.g. 1,1/2,3")

    p = sub.add_parser("verify", help="identity sweeps with seeded random points")
    p.add_argument("what", choices=("frobenius", "even-fact", "odd-fact"))
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("table", help="the 2n <-> 2n+1 correspondence table")
    p.add_argument("--n", type=int, required=True)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--tsv", action="store_true")

    p = sub.add_parser("census", help="signs of characters at the involution class")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--jobs", type=_jobs_value, default=None)

    p = sub.add_parser("sweep", help="exhaustive main character identity check")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=_jobs_value, default=None)

    p = sub.add_parser("dims", help="match B_n dimensions against |character| values")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--target", choices=("even", "odd"), required=True)

    return parser


def _cmd_char(args) -> int:
    lam = parse_partition(args.lam)
    rho = parse_partition(args.rho)
    print(mn_character(lam, rho))
    return 0


def _cmd_chartable(args) -> int:
    lams, classes, rows = character_table(args.m)
    print("\t".join(["partition"] + [format_partition(c) for c in classes]))
    for lam, row in zip(lams, rows):
        print("\t".join([format_partition(lam)] + [str(v) for v in row]))
    return 0


def _cmd_basechange(args) -> int:
    pair = parse_bipartition(args.pair)
    print(format_partition(basechange(pair, args.target)))
    return 0


def _cmd_norm(args) -> int:
    print(norm(parse_partition(args.w), args.target))
    return 0


def _cmd_schur(args) -> int:
    lam = parse_partition(args.lam)
    try:
        values = [Fraction(tok.strip()) for tok in args.at.split(",") if tok.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise PartitionParseError("bad point value in %r: %s" % (args.at, exc))
    print(schur_eval(lam, values))
    return 0


def _cmd_verify(args) -> int:
    defaults = {"frobenius": 6, "even-fact": 5, "odd-fact": 4}
    bound = args.max_size if args.max_size is not None else defaults[args.what]
    print("verify %s: max-size=%d seed=%d" % (args.what, bound, args.seed))
    try:
        if args.what == "frobenius":
            checked = frobenius_sweep(bound, args.seed)
        elif args.what == "even-fact":
            checked = factorization_even_sweep(bound, args.seed)
        else:
            checked, branch_a, branch_b = factorization_odd_sweep(bound, args.seed)
            print("branches: core-(1) cases=%d, empty-core cases=%d" % (branch_a, branch_b))
    except SweepFailure as failure:
        print("FAIL: %s" % failure)
        return 1
    print("PASS: %d identities hold exactly" % checked)
    return 0


def _table_row_object(row) -> dict:
    return {
        "lambda_even": format_partition(row.lambda_even),
        "lambda_odd": format_partition(row.lambda_odd),
        "theta_even": row.theta_even,
        "theta_odd": row.theta_odd,
        "sign": row.sign,
        "bn_dim": row.bn_dim,
    }


def _cmd_table(args) -> int:
    result = build_table(args.n)
    if args.json:
        for row in result.rows:
            print(json.dumps(_table_row_object(row)))
        print(
            json.dumps(
                {
                    "excluded_even": [format_partition(p) for p in result.excluded_even],
                    "excluded_odd": [format_partition(p) for p in result.excluded_odd],
                }
            )
        )
        return 0
    print("\t".join(["lambda_even", "theta_even", "theta_odd", "lambda_odd", "sign", "bn_dim"]))
    for row in result.rows:
        print(
            "\t".join(
                [
                    format_partition(row.lambda_even),
                    str(row.theta_even),
                    str(row.theta_odd),
                    format_partition(row.lambda_odd),
                    str(row.sign),
                    str(row.bn_dim),
                ]
            )
        )
    print("# excluded S_%d: %s" % (2 * args.n, ",".join(format_partition(p) for p in result.excluded_even)))
    print("# excluded S_%d: %s" % (2 * args.n + 1, ",".join(format_partition(p) for p in result.excluded_odd)))
    return 0


def _cmd_census(args) -> int:
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    census = sign_census(args.m, jobs=jobs)
    print(
        "%d total, %d positive, %d negative, %d zero"
        % (census.total, census.num_positive, census.num_negative, census.num_zero)
    )
    return 0


def _cmd_sweep(args) -> int:
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    print("sweep: max=%d seed=%d jobs=%d" % (args.max, args.seed, jobs))
    report = main_theorem_sweep(args.max, jobs=jobs)
    for failure in report.failures:
        print("FAIL: %s" % failure)
    print(
        "checked %d identities (%d against the group-sum oracle): %s"
        % (report.checked, report.oracle_checked, "PASS" if report.ok else "FAIL")
    )
    return 0 if report.ok else 1


def _cmd_dims(args) -> int:
    ok = dimension_match(args.n, args.target)
    counts = [sum(1 for _ in partitions_of(k)) for k in range(args.n + 1)]
    total = sum(counts[k] * counts[args.n - k] for k in range(args.n + 1))
    if ok:
        print("ok: %d dimensions match as multisets" % total)
        return 0
    print("MISMATCH: B_%d dimensions differ from the |character| multiset" % args.n)
    return 1


_HANDLERS = {
    "char": _cmd_char,
    "chartable": _cmd_chartable,
    "basechange": _cmd_basechange,
    "norm": _cmd_norm,
    "schur": _cmd_schur,
    "verify": _cmd_verify,
    "table": _cmd_table,
    "census": _cmd_census,
    "sweep": _cmd_sweep,
    "dims": _cmd_dims,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (PartitionParseError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
