"""Command-line interface: ingest, serve, export.

Exit codes:
  0  success
  1  usage error or invalid query/filter value
  2  input file unreadable or ingestion failed
  3  snapshot missing or unreadable
  4  output not writable
  5  port already in use
"""

from __future__ import annotations

import argparse
import os
import socket
import sys
from pathlib import Path

from . import query as q
from . import timeline
from .analytics import view_to_csv, view_to_json
from .corpus import IngestOptions, load_corpus, read_snapshot, write_snapshot
from .errors import IngestError, QueryValidationError, SnapshotError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_SNAPSHOT = 3
EXIT_OUTPUT = 4
EXIT_PORT = 5

SNAPSHOT_ENV = "KRE_SNAPSHOT"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; route through exit code 1
    def error(self, message):
        raise _UsageError(message)


FILTER_FLAGS = (
    ("--filter.relation-kind", "relation_kind", "cooccurrence or word_similarity"),
    ("--filter.pct-range", "pct_range", "relation percentage range as LO:HI (e.g. 25:100)"),
    ("--filter.node-count", "node_count", "number of keyword nodes (default 20)"),
    ("--filter.time-range", "time_range", "time window as START..END (ISO-8601 UTC)"),
    ("--filter.keyword-kinds", "keyword_kinds", "comma list from hashtag,noun,verb"),
    ("--filter.navigation", "navigation", "comma list of keywords to drill into"),
    ("--filter.sort", "sort", "sort as KEY:DIRECTION (e.g. frequency:descending)"),
)


def _add_filter_flags(parser: argparse.ArgumentParser) -> None:
    for flag, dest, help_text in FILTER_FLAGS:
        parser.add_argument(flag, dest=f"filter_{dest}", metavar="VALUE", help=help_text)


def _filters_to_payload(args: argparse.Namespace) -> dict:
    """Translate --filter.* strings into a query payload; bad syntax
    raises QueryValidationError naming the flag."""
    payload = {}
    errors = []

    def number(text):
        value = float(text)
        return int(value) if value.is_integer() else value

    value = args.filter_relation_kind
    if value is not None:
        payload["relation_kind"] = value
    value = args.filter_pct_range
    if value is not None:
        try:
            lo, hi = value.split(":")
            payload["pct_range"] = [number(lo), number(hi)]
        except ValueError:
            errors.append("--filter.pct-range: expected LO:HI")
    value = args.filter_node_count
    if value is not None:
        try:
            payload["node_count"] = int(value)
        except ValueError:
            errors.append("--filter.node-count: expected an integer")
    value = args.filter_time_range
    if value is not None:
        parts = value.split("..")
        if len(parts) != 2:
            errors.append("--filter.time-range: expected START..END")
        else:
            payload["time_range"] = {"start": parts[0], "end": parts[1]}
    value = args.filter_keyword_kinds
    if value is not None:
        payload["keyword_kinds"] = [k for k in value.split(",") if k]
    value = args.filter_navigation
    if value is not None:
        payload["navigation"] = [k for k in value.split(",") if k]
    value = args.filter_sort
    if value is not None:
        parts = value.split(":")
        if len(parts) != 2:
            errors.append("--filter.sort: expected KEY:DIRECTION")
        else:
            payload["sort"] = {"key": parts[0], "direction": parts[1]}
    if errors:
        raise QueryValidationError(errors)
    return payload


def build_parser() -> _Parser:
    parser = _Parser(prog="kre", description="Keyword relation explorer")
    sub = parser.add_subparsers(dest="command", required=True)

    ingest = sub.add_parser("ingest", help="build a snapshot from a JSONL record file")
    ingest.add_argument("--input", required=True, help="JSONL file of records")
    ingest.add_argument("--out", required=True, help="snapshot file to write")
    ingest.add_argument("--seed", type=int, default=0, help="seed for id anonymization")
    ingest.add_argument("--languages", default="en", help="comma list of allowed language codes")
    ingest.add_argument("--keep-retweets", action="store_true", help="do not drop retweets")
    ingest.add_argument("--no-anonymize", action="store_true", help="keep original record ids")
    ingest.add_argument(
        "--malformed-threshold",
        type=float,
        default=0.01,
        help="fraction of malformed lines tolerated (default 0.01)",
    )

    serve = sub.add_parser("serve", help="serve the HTTP query API from a snapshot")
    serve.add_argument("--snapshot", default=None, help=f"snapshot file (or ${SNAPSHOT_ENV})")
    serve.add_argument("--port", type=int, default=8080)
    serve.add_argument("--host", default="127.0.0.1")

    export = sub.add_parser("export", help="evaluate one query and print it")
    export.add_argument("--snapshot", default=None, help=f"snapshot file (or ${SNAPSHOT_ENV})")
    export.add_argument("--format", choices=("json", "csv"), default="json")
    export.add_argument("--view", choices=("matrix", "timeline"), default="matrix")
    export.add_argument("--mode", choices=timeline.MODES, default="discrete",
                        help="timeline mode (with --view timeline)")
    export.add_argument("--granularity", choices=timeline.GRANULARITIES, default="day",
                        help="timeline granularity (with --view timeline)")
    _add_filter_flags(export)

    return parser


def _resolve_snapshot(flag_value):
    path = flag_value or os.environ.get(SNAPSHOT_ENV)
    if not path:
        raise SnapshotError(f"no snapshot given: pass --snapshot or set ${SNAPSHOT_ENV}")
    return read_snapshot(path)


def _cmd_ingest(args) -> int:
    options = IngestOptions(
        languages=frozenset(k for k in args.languages.split(",") if k),
        drop_retweets=not args.keep_retweets,
        anonymize=not args.no_anonymize,
        seed=args.seed,
        malformed_threshold=args.malformed_threshold,
    )
    try:
        handle = load_corpus(args.input, options)
    except IngestError as exc:
        print(f"ingest failed: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        Path(args.out).parent.mkdir(parents=True, exist_ok=True)
        write_snapshot(handle, args.out)
    except OSError as exc:
        print(f"cannot write snapshot: {exc}", file=sys.stderr)
        return EXIT_OUTPUT
    report = handle.report
    print(
        f"records: {report.kept} kept of {report.total_lines} lines "
        f"(language: {report.dropped_language} dropped, retweets: {report.dropped_retweet} dropped, "
        f"malformed: {len(report.malformed)})"
    )
    print(f"keywords: {handle.distinct_keyword_count} distinct")
    print(f"snapshot: {args.out}")
    return EXIT_OK


def _cmd_serve(args) -> int:
    try:
        handle = _resolve_snapshot(args.snapshot)
    except SnapshotError as exc:
        print(f"serve failed: {exc}", file=sys.stderr)
        return EXIT_SNAPSHOT

    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.bind((args.host, args.port))
    except OSError:
        print(f"port {args.port} on {args.host} is already in use", file=sys.stderr)
        return EXIT_PORT
    finally:
        probe.close()

    import uvicorn

    from .server import create_app

    uvicorn.run(create_app(handle), host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


def _cmd_export(args) -> int:
    try:
        handle = _resolve_snapshot(args.snapshot)
    except SnapshotError as exc:
        print(f"export failed: {exc}", file=sys.stderr)
        return EXIT_SNAPSHOT
    try:
        spec = q.parse_query_spec(_filters_to_payload(args))
    except QueryValidationError as exc:
        for problem in exc.fields:
            print(f"invalid filter: {problem}", file=sys.stderr)
        return EXIT_USAGE

    if args.view == "timeline":
        if args.format == "csv":
            print("csv export is only available for --view matrix", file=sys.stderr)
            return EXIT_USAGE
        payload = q.query_timeline(handle, spec, args.mode, args.granularity)
        sys.stdout.buffer.write(view_to_json(payload))
        return EXIT_OK

    view = q.query_matrix(handle, spec)
    if args.format == "csv":
        sys.stdout.write(view_to_csv(view))
    else:
        sys.stdout.buffer.write(view_to_json(view))
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.command == "ingest":
        return _cmd_ingest(args)
    if args.command == "serve":
        return _cmd_serve(args)
    return _cmd_export(args)


if __name__ == "__main__":
    sys.exit(main())
