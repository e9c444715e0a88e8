#!/usr/bin/env python3
"""The three timeline evolution modes over day-sized buckets.

Each bucket gets its own independently computed matrix (its own top-K
keyword set), which is what makes the topic shift visible: protest
vocabulary dominates the early days, referendum-aftermath vocabulary
the later ones.

  discrete      mutually exclusive day windows
  accumulative  every bucket starts at day 1, so frequencies only grow
  overlapping   each day plus the last quarter (6h) of the previous day
"""

from pathlib import Path

from kre.corpus import IngestOptions, load_corpus
from kre.query import QuerySpec, query_timeline

ROOT = Path(__file__).resolve().parent.parent
handle = load_corpus(ROOT / "fixtures" / "tweets_6day_500.jsonl", IngestOptions(seed=42))

for mode in ("discrete", "accumulative", "overlapping"):
    result = query_timeline(handle, QuerySpec(), mode, "day")
    print(f"\n=== {mode} timeline: {len(result['views'])} buckets ===")
    for i, view in enumerate(result["views"]):
        window = view["time_range"]
        top5 = ", ".join(kw["text"] for kw in view["keywords"][:5])
        print(f"  [{i}] {window['start']} .. {window['end']}  "
              f"({view['record_count']:>3} records)  top: {top5}")

# the final accumulative bucket covers the whole range, so it equals the
# summary view exactly
from kre.analytics import view_to_json
from kre.query import query_matrix

accumulative = query_timeline(handle, QuerySpec(), "accumulative", "day")
summary = query_matrix(handle, QuerySpec())
assert view_to_json(accumulative["views"][-1]) == view_to_json(summary)
print("\nfinal accumulative view == summary view (byte-for-byte)")
