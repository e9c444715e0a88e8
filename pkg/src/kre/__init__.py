"""kre: keyword relation explorer.

Analyzes how frequent keywords and the relations between them evolve
over time in a corpus of timestamped short texts: co-occurrence and
word-similarity matrices over the top-K keywords, sentiment-annotated
frequency stats, drill-down navigation, and discrete / accumulative /
overlapping timeline evolution. Served through a small HTTP/JSON API
and a CLI (ingest / serve / export).
"""

from .analytics import (
    COOCCURRENCE,
    WORD_SIMILARITY,
    KeywordStat,
    RelationMatrix,
    SortSpec,
    build_matrix_view,
    drill_down,
    filter_cells,
    keyword_stats,
    relation_matrix,
    relation_pct,
    sort_keywords,
    top_k,
)
from .corpus import (
    CorpusHandle,
    IngestOptions,
    Record,
    anonymize,
    filter_time,
    load_corpus,
    read_snapshot,
    write_snapshot,
)
from .query import QuerySpec, query_matrix, query_timeline, query_tweets
from .textproc import (
    KeywordOccurrence,
    Sentiment,
    classify_sentiment,
    extract_keywords,
    word_similarity,
)
from .timeline import TimeBucket, make_buckets

__version__ = "0.1.0"
