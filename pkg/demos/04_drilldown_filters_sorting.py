#!/usr/bin/env python3
"""Drill-down navigation, filtering, sorting, and the tweet panel.

Navigating a keyword restricts the corpus to records containing it and
recomputes the matrix one level down; navigating a relation cell drills
two levels in one step. The filter panel options (relation kind,
percentage range, node count, keyword kinds, sort) all live in the same
QuerySpec.
"""

from pathlib import Path

from kre.analytics import SortSpec, view_to_json
from kre.corpus import IngestOptions, load_corpus
from kre.query import QuerySpec, query_matrix, query_tweets

ROOT = Path(__file__).resolve().parent.parent
handle = load_corpus(ROOT / "fixtures" / "tweets_6day_500.jsonl", IngestOptions(seed=42))

# drill into "eu", then into "vote" -- the cell (eu, vote) does both at once
one_level = query_matrix(handle, QuerySpec(navigation=("eu",)))
two_level = query_matrix(handle, QuerySpec(navigation=("eu", "vote")))
via_cell = query_matrix(handle, QuerySpec(navigation=("vote", "eu")))
print(f"navigate eu:        {one_level['record_count']} records")
print(f"navigate eu > vote: {two_level['record_count']} records")
assert view_to_json(two_level) == view_to_json(via_cell)
print("cell navigation (eu, vote) == node-then-node navigation\n")

# keep only strong relations, hashtags only, sorted by total relation value
view = query_matrix(
    handle,
    QuerySpec(
        keyword_kinds=frozenset({"hashtag"}),
        pct_range=(40.0, 100.0),
        node_count=10,
        sort=SortSpec("relation_sum", "descending"),
    ),
)
print("hashtags only, cells in [40%, 100%], sorted by relation sum:")
texts = [kw["text"] for kw in view["keywords"]]
print(f"  nodes: {texts}")
for cell in view["cells"]:
    print(f"  {texts[cell['i']]:<10} x {texts[cell['j']]:<10} pct {cell['pct']:6.2f}")

# word-similarity relation: lexical closeness instead of co-occurrence
similar = query_matrix(handle, QuerySpec(relation_kind="word_similarity", node_count=25))
texts = [kw["text"] for kw in similar["keywords"]]
closest = sorted(similar["cells"], key=lambda c: -c["value"])[:5]
print("\nlexically closest keyword pairs (bigram Jaccard):")
for cell in closest:
    print(f"  {texts[cell['i']]:<12} ~ {texts[cell['j']]:<12} {cell['value']:.3f}")

# the tweet panel: records behind the (eu, vote) cell, newest first
page = query_tweets(handle, QuerySpec(), {"cell": ["eu", "vote"]}, limit=3)
print(f"\ntweets behind the (eu, vote) cell: {page['total']} total, first 3:")
for item in page["items"]:
    print(f"  [{item['timestamp']}] ({item['polarity']}) {item['text']!r}")
    print(f"      matrix keywords in this tweet: {item['matched_keywords']}")
