#!/usr/bin/env python3
"""Build the golden MatrixView for the fixture's default query.

The golden bytes are produced by the brute-force oracle in
tests/oracles.py (exhaustive pair counting and from-scratch view
assembly), NOT by the engine. The engine's output is compared here as a
sanity check and must already match before the golden is written.

Run from the repo root: python tools/make_golden.py
"""

import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

from kre.corpus import IngestOptions, load_corpus, write_snapshot  # noqa: E402
from kre.analytics import view_to_json  # noqa: E402
from kre.query import QuerySpec, query_matrix  # noqa: E402

from oracles import canonical_json_bytes, oracle_default_view, snapshot_to_simple  # noqa: E402

FIXTURE = ROOT / "fixtures" / "tweets_6day_500.jsonl"
GOLDEN = ROOT / "tests" / "golden" / "fixture_default_matrix.json"
SEED = 42


def main() -> int:
    handle = load_corpus(FIXTURE, IngestOptions(seed=SEED))
    with tempfile.NamedTemporaryFile(suffix=".snap") as tmp:
        write_snapshot(handle, tmp.name)
        simple, kinds = snapshot_to_simple(tmp.name)

    timestamps = sorted(ts for _, ts, _, _, _ in simple)
    window_start = timestamps[0]
    # full-corpus window is half-open: one second past the max timestamp
    last = timestamps[-1]
    assert last.endswith("Z")
    import datetime

    end_dt = datetime.datetime.fromisoformat(last[:-1] + "+00:00") + datetime.timedelta(seconds=1)
    window_end = end_dt.strftime("%Y-%m-%dT%H:%M:%SZ")

    golden = oracle_default_view(simple, kinds, window_start, window_end, k=20)
    golden_bytes = canonical_json_bytes(golden)

    engine_bytes = view_to_json(query_matrix(handle, QuerySpec()))
    if engine_bytes != golden_bytes:
        print("ERROR: engine output disagrees with the oracle; not writing golden")
        oracle_view = golden
        engine_view = query_matrix(handle, QuerySpec())
        for key in oracle_view:
            if canonical_json_bytes(oracle_view[key]) != canonical_json_bytes(engine_view[key]):
                print(f"  mismatch in {key!r}")
        return 1

    GOLDEN.parent.mkdir(parents=True, exist_ok=True)
    GOLDEN.write_bytes(golden_bytes)
    print(f"wrote {GOLDEN} ({len(golden_bytes)} bytes, {len(golden['keywords'])} keywords, "
          f"{len(golden['cells'])} cells)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
