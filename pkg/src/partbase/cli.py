"""``partbase`` command line: size, witness, verify, table, selftest.

Exit codes: 0 ok or base, 1 not a base, 2 usage or parse error, 3 undefined
(the unfaithful (2,2) action), 4 search exhausted.
"""

from __future__ import annotations

import argparse
import csv
import logging
import os
import sys
from pathlib import Path

from .core import ALT, SYM, CodeSet, DomainError, ShapeError, VERIFIED
from .dispatch import DEFAULT_BUDGET, dispatch_witness
from .formulas import base_size_alt, base_size_sym
from .verifier import is_base
from .witnessfile import ParseError, WitnessFile, load, serialize

EXIT_OK, EXIT_NOT_BASE, EXIT_USAGE, EXIT_UNDEFINED, EXIT_EXHAUSTED = 0, 1, 2, 3, 4


def default_workers() -> int:
    env = os.environ.get("PARTITION_BASE_WORKERS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def cycle_notation(perm) -> str:
    seen, cycles = set(), []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc, j = [], start
        while j not in seen:
            seen.add(j)
            cyc.append(j)
            j = perm[j]
        cycles.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(cycles) or "()"


def cmd_size(args) -> int:
    answer = (base_size_alt if args.alt else base_size_sym)(args.a, args.b)
    print(answer)
    return EXIT_UNDEFINED if answer.undefined else EXIT_OK


def cmd_witness(args) -> int:
    group = ALT if args.alt else SYM
    try:
        cert = dispatch_witness(args.a, args.b, group, search_budget=args.budget,
                                seed=args.seed, workers=args.workers)
    except DomainError as exc:
        print(f"undefined: {exc}", file=sys.stderr)
        return EXIT_UNDEFINED
    if cert.status != VERIFIED:
        print(f"size {cert.size} known, witness unavailable: {cert.detail} [{cert.provenance}]",
              file=sys.stderr)
        return EXIT_EXHAUSTED
    text = serialize(WitnessFile.from_certificate(cert, with_codeset=not args.no_codeset))
    if args.out:
        Path(args.out).write_text(text)
        print(f"provenance: {cert.provenance}")
    else:
        sys.stdout.write(text)
        print(f"provenance: {cert.provenance}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        text = Path(args.file).read_text()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        obj = load(text, index_base=args.index_base)
    except (ParseError, ShapeError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    target = obj if isinstance(obj, CodeSet) else (obj.partitions or obj.codeset)
    if target is None or (not isinstance(target, CodeSet) and not target):
        print("parse error: file has neither partitions nor a code set", file=sys.stderr)
        return EXIT_USAGE
    verdict = is_base(target, ALT if args.alt else SYM)
    if verdict:
        print("BASE")
        return EXIT_OK
    print(f"NOT A BASE: {verdict.reason}")
    if verdict.point_perm is not None:
        print(f"witness: {cycle_notation(verdict.point_perm)}")
    return EXIT_NOT_BASE


def table_rows(amax: int, bmax: int, alt: bool) -> list[list[str]]:
    f = base_size_alt if alt else base_size_sym
    rows = [["b/a"] + [str(a) for a in range(2, amax + 1)]]
    for b in range(2, bmax + 1):
        row = [str(b)]
        for a in range(2, amax + 1):
            v = f(a, b).value
            row.append("-" if v is None else str(v))
        rows.append(row)
    return rows


def cmd_table(args) -> int:
    writer = csv.writer(sys.stdout, delimiter="," if args.format == "csv" else "\t",
                        lineterminator="\n")
    writer.writerows(table_rows(args.amax, args.bmax, args.alt))
    return EXIT_OK


def cmd_selftest(args) -> int:
    from .acceptance import run_suite

    results = run_suite(args.level, fixture=args.fixture, out=sys.stdout)
    return EXIT_OK if all(r.passed for r in results) else EXIT_NOT_BASE


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="partbase",
                                     description="Base sizes of Sym(ab) and Alt(ab) on regular partitions.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("size", help="print the base size and the rule used")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--alt", action="store_true", help="alternating group")
    p.set_defaults(func=cmd_size)

    p = sub.add_parser("witness", help="build and verify a minimum base")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--alt", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    p.add_argument("--workers", type=_positive, default=None,
                   help="search processes (default: $PARTITION_BASE_WORKERS or all cores)")
    p.add_argument("--out", help="write the witness file here instead of stdout")
    p.add_argument("--no-codeset", action="store_true", help="omit the code set block")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", help="check a witness file or bare code set")
    p.add_argument("file")
    p.add_argument("--alt", action="store_true")
    p.add_argument("--index-base", type=int, choices=(0, 1), default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="base sizes for 2<=a<=amax, 2<=b<=bmax")
    p.add_argument("--amax", type=int, default=12)
    p.add_argument("--bmax", type=int, default=12)
    p.add_argument("--alt", action="store_true")
    p.add_argument("--format", choices=("csv", "tsv"), default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.add_argument("--fixture", help="use this (8,3) witness file instead of the shipped one")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "workers", 1) is None:
        args.workers = default_workers()
    if args.command in ("size", "witness"):
        if args.a < 2 or args.b < 2:
            parser.error("a and b must be at least 2")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
