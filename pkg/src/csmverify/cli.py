"""Command-line entry point.

Subcommands
-----------
verify   run verification suites and emit a JSON (or CSV) report
table    materialize and cache the structure-constant and CSM tables
show     print a single class (csm / richardson / box) in both bases

Exit codes: 0 all checks pass; 1 a conjecture violation was found (with
witnesses in the report); 2 a proved identity failed (implementation bug);
3 usage error.

The cache directory is taken from --cache-dir, else the CSMVERIFY_CACHE
environment variable, else a per-user default.  Weyl group elements are
written as reduced words like "s1 s2 s1", with "e" for the identity.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path

from .boxproduct import FULL_CROSS_VALIDATION_MAX_ORDER
from .cache import TableCache, default_cache_dir
from .errors import (
    CapacityExceeded,
    CsmVerifyError,
    GroupMismatch,
    InternalInvariantError,
    InvalidCartan,
    UsageError,
)
from .rootdata import DEFAULT_MAX_ORDER, SERIES
from .verify import (
    SUITE_NAMES,
    build_engines,
    materialize_tables,
    run_verification,
)

EXIT_PASS = 0
EXIT_VIOLATION = 1
EXIT_INTERNAL = 2
EXIT_USAGE = 3


class _Parser(argparse.ArgumentParser):
    """argparse with the package's usage exit code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_group_args(p):
    p.add_argument("--type", required=True, metavar="SERIES",
                   help=f"series letter, one of {''.join(SERIES)}")
    p.add_argument("--rank", required=True, type=int)
    p.add_argument("--cache-dir", default=None,
                   help="table cache directory (default: $CSMVERIFY_CACHE or user cache)")
    p.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER,
                   help="refuse groups larger than this (default %(default)s)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="csmverify", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run verification suites")
    _add_group_args(p_verify)
    p_verify.add_argument("--suite", action="append", default=None,
                          choices=list(SUITE_NAMES) + ["all"],
                          help="suite to run (repeatable; default all)")
    p_verify.add_argument("--max-length", type=int, default=None,
                          help="restrict u, v to elements of at most this length")
    p_verify.add_argument("--jobs", type=int, default=1,
                          help="parallel worker processes (default 1)")
    p_verify.add_argument("--output", default=None,
                          help="write the report here instead of stdout")
    p_verify.add_argument("--format", choices=["json", "csv"], default="json")

    p_table = sub.add_parser("table", help="materialize and cache tables")
    _add_group_args(p_table)

    p_show = sub.add_parser("show", help="print one class in both bases")
    p_show.add_argument("kind", choices=["csm", "richardson", "box"])
    _add_group_args(p_show)
    p_show.add_argument("--u", required=True, help='reduced word, e.g. "s1 s2" or "e"')
    p_show.add_argument("--v", default=None, help="second word (richardson/box)")
    return parser


def _cache_from_args(args) -> TableCache:
    root = Path(args.cache_dir) if args.cache_dir else default_cache_dir()
    return TableCache(root)


def _engines_from_args(args, need_products: bool):
    cache = _cache_from_args(args)
    events: list = []
    engines = build_engines(args.type.upper(), args.rank, cache=cache,
                            max_order=args.max_order, cache_events=events)
    if need_products:
        materialize_tables(engines, cache=cache, cache_events=events)
    return engines, cache, events


def cmd_verify(args) -> int:
    suites = args.suite or ["all"]
    report = run_verification(
        args.type.upper(), args.rank,
        suites=suites,
        max_length=args.max_length,
        jobs=args.jobs,
        cache=_cache_from_args(args),
        max_order=args.max_order,
    )
    for line in report.summary_lines():
        print(line)
    if args.format == "json":
        body = report.to_json() + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerows(report.csv_rows())
        body = buf.getvalue()
    if args.output:
        Path(args.output).write_text(body, encoding="utf-8")
        print(f"report written to {args.output}")
    else:
        print(body, end="")
    return report.exit_code


def cmd_table(args) -> int:
    cache = _cache_from_args(args)
    events: list = []
    engines = build_engines(args.type.upper(), args.rank, cache=cache,
                            cache_events=events, max_order=args.max_order)
    hits = {e["kind"] for e in events if e["event"] == "hit"}
    checksums = materialize_tables(engines, cache=cache, cache_events=events)
    for kind in sorted(checksums):
        source = "cache hit" if kind in hits else "computed"
        print(f"{kind} table for {args.type.upper()}{args.rank}: {source}, "
              f"checksum {checksums[kind]}")
    return EXIT_PASS


def cmd_show(args) -> int:
    need_products = args.kind in ("richardson", "box")
    engines, _, _ = _engines_from_args(args, need_products=need_products)
    group = engines.group
    try:
        u = group.parse(args.u)
        v = group.parse(args.v) if args.v is not None else None
    except GroupMismatch as exc:
        raise UsageError(str(exc)) from exc
    if args.kind == "csm":
        cls = engines.csm.csm_schubert_cell(u)
        label = f"csm cell class of {u}"
    elif args.kind == "richardson":
        if v is None:
            raise UsageError("richardson requires --v")
        cls = engines.rich.csm_richardson(u, v)
        label = f"csm Richardson class of ({u}, {v})"
    else:
        if v is None:
            raise UsageError("box requires --v")
        if group.order > FULL_CROSS_VALIDATION_MAX_ORDER:
            print(f"note: group order {group.order} above "
                  f"{FULL_CROSS_VALIDATION_MAX_ORDER}; chi cross-validation sampled")
        cls = engines.box.box_product(u, v)
        label = f"box product eps^{{{u}}} [] eps^{{{v}}}"
    print(label)
    print(f"  eps basis: {cls.epsilon_string()}")
    print(f"  [X] basis: {cls.schubert_variety_string()}")
    return EXIT_PASS


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "table":
            return cmd_table(args)
        if args.command == "show":
            return cmd_show(args)
        raise UsageError(f"unknown command {args.command!r}")
    except (UsageError, InvalidCartan, CapacityExceeded, GroupMismatch) as exc:
        print(f"csmverify: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalInvariantError as exc:
        print(f"csmverify: internal invariant failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except CsmVerifyError as exc:
        print(f"csmverify: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
