"""Command-line front end.

Exit codes: 0 success (or an IDPT for ``check``), 1 a negative domain answer
(not an IDPT, inadmissible d, brute-force scan cap hit), 2 usage errors and
overflow.  Data goes to stdout, diagnostics to stderr.
"""

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, fields

from . import admissibility, generator, oracle, primes
from .intarith import U64_MAX, ArithmeticOverflow

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2

RECORD_FIELDS = ("d", "n", "r", "a", "b", "c")
BRUTE_FIELDS = ("d", "n", "a", "b", "c")


@dataclass(frozen=True)
class OutputRecord:
    d: int
    n: int
    r: int
    a: int
    b: int
    c: int

    @classmethod
    def from_triple(cls, t):
        return cls(d=t.d, n=t.n, r=t.r, a=t.a, b=t.b, c=t.c)

    def as_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}


def format_rows(rows, columns, fmt):
    """Render dict rows as 'table', 'csv' or 'jsonl' text."""
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    if fmt == "jsonl":
        return "".join(json.dumps({k: row[k] for k in columns}) + "\n" for row in rows)
    widths = {k: max([len(k)] + [len(str(row[k])) for row in rows]) for k in columns}
    lines = ["  ".join(k.rjust(widths[k]) for k in columns)]
    lines += ["  ".join(str(row[k]).rjust(widths[k]) for k in columns) for row in rows]
    return "\n".join(lines) + "\n"


def parse_records(text, fmt):
    """Inverse of format_rows for 'csv' and 'jsonl' emissions of OutputRecords."""
    if fmt == "csv":
        rows = list(csv.DictReader(io.StringIO(text)))
    elif fmt == "jsonl":
        rows = [json.loads(line) for line in text.splitlines() if line.strip()]
    else:
        raise ValueError(f"cannot parse format {fmt!r}")
    return [OutputRecord(**{k: int(row[k]) for k in RECORD_FIELDS}) for row in rows]


def _positive(text):
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {value}")
    return value


def cmd_gen(args, out):
    limit = U64_MAX if args.u64 else None
    if (args.d is None) == (args.a_max is None):
        raise _Usage("give either --d with --count, or --a-max")
    if args.d is not None and args.count is None:
        raise _Usage("--d requires --count")
    if args.a_max is not None and args.count is not None:
        raise _Usage("--count cannot be combined with --a-max")

    try:
        if args.d is not None:
            triples = generator.generate_for_d(args.d, generator.GenConfig.count(args.count), limit)
        else:
            triples = generator.generate_all(args.a_max, limit=limit)
    except admissibility.InadmissibleGap as exc:
        print(f"no IDPTs exist for d={exc.d}", file=sys.stderr)
        return EXIT_NEGATIVE
    except ArithmeticOverflow as exc:
        print(f"overflow: {exc}", file=sys.stderr)
        return EXIT_USAGE

    rows = [OutputRecord.from_triple(t).as_dict() for t in triples]
    out.write(format_rows(rows, RECORD_FIELDS, args.format))
    return EXIT_OK


def cmd_brute(args, out):
    try:
        triples = oracle.brute_force_by_d(args.d, args.count)
        status = EXIT_OK
    except oracle.ScanCapReached as exc:
        print(f"none found below cap: {exc}", file=sys.stderr)
        triples = exc.found
        status = EXIT_NEGATIVE
    rows = [dict(d=args.d, n=(a - args.d) // 2, a=a, b=b, c=c) for a, b, c in triples]
    out.write(format_rows(rows, BRUTE_FIELDS, args.format))
    return status


def cmd_check(args, out):
    verdict = oracle.classify(args.a, args.b, args.c)
    if verdict.kind is oracle.Kind.IDPT:
        out.write("idpt\n")
        return EXIT_OK
    if verdict.kind is oracle.Kind.REDUCIBLE_DPT:
        out.write(f"dpt gcd={verdict.gcd}\n")
    else:
        out.write("not-dpt\n")
    return EXIT_NEGATIVE


def cmd_admissible(args, out):
    for d in admissibility.admissible_ds_up_to(args.max):
        out.write(f"{d}\n")
    return EXIT_OK


def cmd_factor(args, out):
    if args.n < 2:
        raise _Usage("factor requires n >= 2")
    out.write(f"{primes.factorize(args.n)}\n")
    return EXIT_OK


class _Usage(Exception):
    pass


def build_parser():
    parser = argparse.ArgumentParser(
        prog="idpt", description="Primitive Pythagorean triples indexed by the gap d = c - b."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate triples for one d, or all with a <= A")
    gen.add_argument("--d", type=_positive)
    gen.add_argument("--count", type=int)
    gen.add_argument("--a-max", type=_positive)
    gen.add_argument("--format", choices=("table", "csv", "jsonl"), default="table")
    gen.add_argument("--u64", action="store_true", help="fail on values above 2^64 - 1")
    gen.set_defaults(func=cmd_gen)

    brute = sub.add_parser(
        "brute", help=f"brute-force n-scan for one d (cap from ${oracle.SCAN_CAP_ENV})"
    )
    brute.add_argument("--d", type=_positive, required=True)
    brute.add_argument("--count", type=_positive, required=True)
    brute.add_argument("--format", choices=("table", "csv", "jsonl"), default="table")
    brute.set_defaults(func=cmd_brute)

    check = sub.add_parser("check", help="classify three side lengths")
    check.add_argument("a", type=_positive)
    check.add_argument("b", type=_positive)
    check.add_argument("c", type=_positive)
    check.set_defaults(func=cmd_check)

    adm = sub.add_parser("admissible", help="list admissible d up to a bound")
    adm.add_argument("--max", type=_positive, required=True)
    adm.set_defaults(func=cmd_admissible)

    fac = sub.add_parser("factor", help="print the prime factorization of n")
    fac.add_argument("n", type=_positive)
    fac.set_defaults(func=cmd_factor)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args, out)
    except _Usage as exc:
        parser.print_usage(sys.stderr)
        print(f"idpt: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"idpt: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
