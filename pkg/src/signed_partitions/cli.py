"""Command-line interface.

Exit codes: 0 success, 1 verification failed, 2 usage error,
3 size guard exceeded, 4 domain error (bad partition, even m, ...).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import bijection, core, stirling
from .enumeration import enumerate_partitions
from .errors import (
    BijectionError,
    GuardExceeded,
    InvalidPartition,
    PartitionSyntaxError,
    SignedPartitionsError,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_GUARD = 3
EXIT_DOMAIN = 4

TABLE_LIMIT = 64
ENUMERATE_LIMIT = 8


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _kind(text: str) -> str:
    if text.upper() not in ("A", "B"):
        raise argparse.ArgumentTypeError(f"type must be a or b, got {text!r}")
    return text.upper()


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {value}")
    return value


# ---------------------------------------------------------------------------
# subcommands; each returns (exit code, stdout text)


def cmd_table(args) -> tuple[int, str]:
    if args.max_n > TABLE_LIMIT and not args.force:
        raise GuardExceeded(f"--max-n {args.max_n} exceeds {TABLE_LIMIT} (use --force)")
    rows = stirling.triangle(args.type).rows(args.max_n)
    width = args.max_n + 1
    if args.format == "json":
        return EXIT_OK, _dumps({"type": args.type, "rows": [list(r) for r in rows]}) + "\n"
    if args.format == "csv":
        lines = ["n\\k," + ",".join(str(k) for k in range(width))]
        for n, r in enumerate(rows):
            cells = [str(v) for v in r] + [""] * (width - len(r))
            lines.append(f"{n}," + ",".join(cells))
        return EXIT_OK, "\n".join(lines) + "\n"
    cols = [max(len(str(r[k])) for r in rows[k:]) for k in range(width)]
    cols = [max(c, len(str(k))) for k, c in enumerate(cols)]
    head = max(len(str(args.max_n)), 3)
    lines = ["n\\k".rjust(head) + " | " + " ".join(str(k).rjust(c) for k, c in enumerate(cols))]
    lines.append("-" * len(lines[0]))
    for n, r in enumerate(rows):
        lines.append(str(n).rjust(head) + " | " + " ".join(str(v).rjust(cols[k]) for k, v in enumerate(r)).rstrip())
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_enumerate(args) -> tuple[int, str]:
    if args.k is not None and args.k > args.n:
        raise UsageError(f"--k {args.k} exceeds --n {args.n}")
    if args.n > ENUMERATE_LIMIT and not args.force:
        raise GuardExceeded(f"--n {args.n} exceeds {ENUMERATE_LIMIT} (use --force)")
    lines = []
    for p in enumerate_partitions(args.n, args.k):
        if args.format == "json":
            lines.append(_dumps(core.to_json(p)))
        else:
            lines.append(core.format(p, expanded=args.expanded))
    count = len(lines)
    lines.append(_dumps({"count": count}) if args.format == "json" else f"count={count}")
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_encode(args) -> tuple[int, str]:
    p = core.parse(args.partition)
    try:
        choices = bijection.parse_urns(args.choices)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    f = bijection.encode(p, choices, args.m)
    if args.format == "json":
        return EXIT_OK, _dumps(f.to_json()) + "\n"
    return EXIT_OK, f.format() + "\n"


def cmd_decode(args) -> tuple[int, str]:
    try:
        values = bijection.parse_urns(args.assignment)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    p, choices = bijection.decode(bijection.UrnAssignment(args.m, values))
    if args.format == "json":
        out = {"partition": core.to_json(p), "choices": list(choices)}
        return EXIT_OK, _dumps(out) + "\n"
    return EXIT_OK, core.format(p) + "\n" + "choices=" + ",".join(map(str, choices)) + "\n"


def cmd_verify_identity(args) -> tuple[int, str]:
    report = stirling.verify_identity(args.type, args.n)
    code = EXIT_OK if report.equal else EXIT_FAILED
    return code, _dumps(report.to_json()) + "\n"


def cmd_verify_bijection(args) -> tuple[int, str]:
    limit = None if args.force else args.max_functions
    report = bijection.verify_bijection(args.n, args.m, max_functions=limit)
    code = EXIT_OK if report.passed else EXIT_FAILED
    return code, _dumps(report.to_json()) + "\n"


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signed-partitions",
        description="Signed partitions, type-B Stirling numbers and the balls-into-urns bijection.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="print a Stirling triangle")
    t.add_argument("--max-n", type=_natural, default=6)
    t.add_argument("--type", type=_kind, default="B")
    t.add_argument("--format", choices=("text", "csv", "json"), default="text")
    t.add_argument("--force", action="store_true", help=f"allow --max-n above {TABLE_LIMIT}")
    t.set_defaults(func=cmd_table)

    e = sub.add_parser("enumerate", help="list all signed partitions of [+-n]")
    e.add_argument("--n", type=_natural, required=True)
    e.add_argument("--k", type=_natural, default=None, help="only partitions with k pairs")
    e.add_argument("--format", choices=("text", "json"), default="text")
    e.add_argument("--expanded", action="store_true", help="list mirrored blocks too")
    e.add_argument("--force", action="store_true", help=f"allow --n above {ENUMERATE_LIMIT}")
    e.set_defaults(func=cmd_enumerate)

    enc = sub.add_parser("encode", help="partition + urn choices -> assignment")
    enc.add_argument("--partition", required=True, help="e.g. 'z:[1];p:[[2,-3,5],[4,-6]]'")
    enc.add_argument("--choices", default="", help="comma-separated urns, one per pair")
    enc.add_argument("--m", type=int, required=True, help="number of urns (odd)")
    enc.add_argument("--format", choices=("text", "json"), default="text")
    enc.set_defaults(func=cmd_encode)

    dec = sub.add_parser("decode", help="assignment -> partition + urn choices")
    dec.add_argument("--assignment", required=True, help="comma-separated urns, e.g. 1,4,5,7,4,2")
    dec.add_argument("--m", type=int, required=True, help="number of urns (odd)")
    dec.add_argument("--format", choices=("text", "json"), default="text")
    dec.set_defaults(func=cmd_decode)

    v = sub.add_parser("verify", help="exact verification reports (JSON)")
    vsub = v.add_subparsers(dest="what", required=True)
    vi = vsub.add_parser("identity", help="x^n as a falling-factorial expansion")
    vi.add_argument("--n", type=_natural, required=True)
    vi.add_argument("--type", type=_kind, default="B")
    vi.set_defaults(func=cmd_verify_identity)
    vb = vsub.add_parser("bijection", help="exhaustive check over all f: [n] -> [m]")
    vb.add_argument("--n", type=_natural, required=True)
    vb.add_argument("--m", type=int, required=True)
    vb.add_argument("--max-functions", type=_natural, default=bijection.DEFAULT_MAX_FUNCTIONS)
    vb.add_argument("--force", action="store_true", help="ignore --max-functions")
    vb.set_defaults(func=cmd_verify_bijection)
    return parser


def _fail(code: int, label: str, exc: BaseException) -> int:
    sys.stderr.write(f"error ({label}): {exc}\n")
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        code, out = args.func(args)
    except UsageError as exc:
        return _fail(EXIT_USAGE, "usage", exc)
    except PartitionSyntaxError as exc:
        return _fail(EXIT_USAGE, "syntax", exc)
    except GuardExceeded as exc:
        return _fail(EXIT_GUARD, "size guard", exc)
    except BijectionError as exc:
        return _fail(EXIT_DOMAIN, exc.rule, exc)
    except InvalidPartition as exc:
        return _fail(EXIT_DOMAIN, "signed-partition rule", exc)
    except SignedPartitionsError as exc:
        return _fail(EXIT_DOMAIN, type(exc).__name__, exc)
    sys.stdout.write(out)
    sys.stdout.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
