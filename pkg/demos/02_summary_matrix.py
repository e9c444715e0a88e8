#!/usr/bin/env python3
"""The summary view: one relation matrix over the whole corpus.

Shows the default query (top-20 keywords by frequency, co-occurrence
relation) the way the explorer's initial screen would: frequency bars
split by sentiment, and the strongest relation cells.
"""

from pathlib import Path

from kre.corpus import IngestOptions, load_corpus
from kre.query import QuerySpec, query_matrix

ROOT = Path(__file__).resolve().parent.parent
handle = load_corpus(ROOT / "fixtures" / "tweets_6day_500.jsonl", IngestOptions(seed=42))

view = query_matrix(handle, QuerySpec())
print(f"summary view over {view['record_count']} records, "
      f"{len(view['keywords'])} nodes, {len(view['cells'])} cells\n")

# frequency bar per node, split green/blue/red in the UI; here rendered
# as +/=/- segments scaled to the view's max frequency
max_freq = max(kw["frequency"] for kw in view["keywords"])
print(f"{'keyword':<14} {'freq':>4}  sentiment bar (+ positive, = neutral, - negative)")
for kw in view["keywords"]:
    sentiment = kw["sentiment"]
    width = 40 * kw["frequency"] / max_freq
    pos = round(width * sentiment["positive"] / kw["frequency"])
    neg = round(width * sentiment["negative"] / kw["frequency"])
    neu = max(0, round(width) - pos - neg)
    bar = "+" * pos + "=" * neu + "-" * neg
    print(f"{kw['text']:<14} {kw['frequency']:>4}  {bar}")

texts = [kw["text"] for kw in view["keywords"]]
strongest = sorted(view["cells"], key=lambda c: -c["value"])[:8]
print("\nstrongest co-occurrence cells (cell opacity in the UI = pct/100):")
for cell in strongest:
    print(f"  {texts[cell['i']]:<12} x {texts[cell['j']]:<12} "
          f"{cell['tweet_count']:>3} tweets  pct {cell['pct']:6.2f}")
