"""Query evaluation: one QuerySpec drives every view.

The pipeline for a single matrix is always: time filter, drill-down
along the navigation path, keyword stats under the kind filter, top-K
selection, relation matrix, percentage-range cell filter, sort. Timeline
queries run the same pipeline once per bucket; each bucket gets its own
top-K set. Evaluation is a pure function of (corpus, spec), so repeated
queries yield identical results.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime, timedelta
from typing import Optional, Sequence

from . import analytics, timeline
from .analytics import SortSpec, build_matrix_view
from .corpus import CorpusHandle, Record, filter_time
from .errors import QueryValidationError
from .textproc import ALL_KINDS
from .timeutil import format_utc, parse_utc

DEFAULT_NODE_COUNT = 20
MAX_TWEET_PAGE = 500


@dataclass(frozen=True)
class QuerySpec:
    """Full filter state for one query; defaults mirror the initial
    explorer view (top-20 co-occurrence, all kinds, full range)."""

    relation_kind: str = analytics.COOCCURRENCE
    pct_range: tuple[float, float] = (0.0, 100.0)
    node_count: int = DEFAULT_NODE_COUNT
    time_range: Optional[tuple[datetime, datetime]] = None
    keyword_kinds: frozenset[str] = frozenset(ALL_KINDS)
    navigation: tuple[str, ...] = ()
    sort: SortSpec = field(default_factory=SortSpec)


def _check_time_range(value, errors: list[str]) -> Optional[tuple[datetime, datetime]]:
    if not isinstance(value, dict) or set(value) != {"start", "end"}:
        errors.append('time_range: expected an object with "start" and "end"')
        return None
    try:
        start = parse_utc(value["start"])
        end = parse_utc(value["end"])
    except (ValueError, TypeError) as exc:
        errors.append(f"time_range: {exc}")
        return None
    if start >= end:
        errors.append("time_range: start must be before end")
        return None
    return (start, end)


def parse_query_spec(payload: dict, allow_extra: Sequence[str] = ()) -> QuerySpec:
    """Validate a request payload into a QuerySpec.

    Collects every violated field and reports them all at once in a
    single QueryValidationError. Keys in ``allow_extra`` are ignored
    (callers strip and handle them separately).
    """
    if not isinstance(payload, dict):
        raise QueryValidationError(["body: expected a JSON object"])
    errors: list[str] = []
    known = {
        "relation_kind",
        "pct_range",
        "node_count",
        "time_range",
        "keyword_kinds",
        "navigation",
        "sort",
    }
    for key in payload:
        if key not in known and key not in allow_extra:
            errors.append(f"{key}: unknown field")

    kwargs = {}
    if "relation_kind" in payload:
        value = payload["relation_kind"]
        if value not in analytics.RELATION_KINDS:
            errors.append(f"relation_kind: must be one of {list(analytics.RELATION_KINDS)}")
        else:
            kwargs["relation_kind"] = value
    if "pct_range" in payload:
        value = payload["pct_range"]
        if (
            not isinstance(value, (list, tuple))
            or len(value) != 2
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value)
        ):
            errors.append("pct_range: expected [lo, hi] numbers")
        elif not (0 <= value[0] <= value[1] <= 100):
            errors.append("pct_range: need 0 <= lo <= hi <= 100")
        else:
            kwargs["pct_range"] = (float(value[0]), float(value[1]))
    if "node_count" in payload:
        value = payload["node_count"]
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            errors.append("node_count: must be an integer >= 1")
        else:
            kwargs["node_count"] = value
    if "time_range" in payload and payload["time_range"] is not None:
        parsed = _check_time_range(payload["time_range"], errors)
        if parsed:
            kwargs["time_range"] = parsed
    if "keyword_kinds" in payload:
        value = payload["keyword_kinds"]
        if (
            not isinstance(value, (list, tuple))
            or not value
            or not all(isinstance(v, str) for v in value)
            or not set(value) <= set(ALL_KINDS)
        ):
            errors.append(f"keyword_kinds: expected a non-empty subset of {list(ALL_KINDS)}")
        else:
            kwargs["keyword_kinds"] = frozenset(value)
    if "navigation" in payload:
        value = payload["navigation"]
        if not isinstance(value, (list, tuple)) or not all(isinstance(v, str) and v for v in value):
            errors.append("navigation: expected a list of non-empty keyword strings")
        else:
            kwargs["navigation"] = tuple(value)
    if "sort" in payload:
        value = payload["sort"]
        if not isinstance(value, dict) or not set(value) <= {"key", "direction"}:
            errors.append('sort: expected an object with "key" and/or "direction"')
        else:
            key = value.get("key", analytics.SORT_FREQUENCY)
            direction = value.get("direction", analytics.DESCENDING)
            if key not in analytics.SORT_KEYS:
                errors.append(f"sort.key: must be one of {list(analytics.SORT_KEYS)}")
            elif direction not in (analytics.ASCENDING, analytics.DESCENDING):
                errors.append("sort.direction: must be ascending or descending")
            else:
                kwargs["sort"] = SortSpec(key=key, direction=direction)

    if errors:
        raise QueryValidationError(errors)
    return QuerySpec(**kwargs)


def full_window(handle: CorpusHandle) -> Optional[tuple[datetime, datetime]]:
    """The half-open window covering the whole corpus.

    Timestamps have second precision, so [min, max + 1s) contains every
    record.
    """
    if handle.time_range is None:
        return None
    start, end = handle.time_range
    return (start, end + timedelta(seconds=1))


def _scope(handle: CorpusHandle, spec: QuerySpec):
    """Apply time window and navigation; returns (records, window)."""
    window = spec.time_range if spec.time_range is not None else full_window(handle)
    if spec.time_range is not None:
        records = filter_time(handle.records, *spec.time_range)
    else:
        records = handle.records
    if spec.navigation:
        records = analytics.drill_down(records, spec.navigation)
    return records, window


def _evaluate(records: Sequence[Record], spec: QuerySpec, window) -> dict:
    stats = analytics.keyword_stats(records, spec.keyword_kinds)
    top = analytics.top_k(stats, spec.node_count)
    matrix = analytics.relation_matrix(
        records, top, spec.relation_kind, time_range=window
    )
    norm_max = matrix.max_value
    kept = analytics.filter_cells(matrix, *spec.pct_range)
    matrix = matrix.with_cells(kept)
    perm = analytics.sort_keywords(matrix, spec.sort)
    matrix = analytics.permute_matrix(matrix, perm)
    return build_matrix_view(matrix, norm_max=norm_max)


def query_matrix(handle: CorpusHandle, spec: QuerySpec = QuerySpec()) -> dict:
    """The summary view: one MatrixView over the spec's record scope."""
    records, window = _scope(handle, spec)
    return _evaluate(records, spec, window)


def timeline_matrices(
    handle: CorpusHandle,
    buckets: Sequence[timeline.TimeBucket],
    spec: QuerySpec,
) -> list[dict]:
    """One MatrixView per bucket, each evaluated independently over the
    bucket's window (so each bucket has its own top-K set). Empty
    buckets still emit a view, preserving the grid slot."""
    views = []
    for bucket in buckets:
        records = filter_time(handle.records, bucket.start, bucket.end)
        if spec.navigation:
            records = analytics.drill_down(records, spec.navigation)
        views.append(_evaluate(records, spec, bucket.window))
    return views


def query_timeline(
    handle: CorpusHandle,
    spec: QuerySpec,
    mode: str,
    granularity: str,
) -> dict:
    """Bucketed views for one timeline mode over the spec's time range
    (defaulting to the full corpus range)."""
    window = spec.time_range if spec.time_range is not None else full_window(handle)
    if window is None:
        return {"mode": mode, "granularity": granularity, "views": []}
    buckets = timeline.make_buckets(window[0], window[1], granularity, mode)
    return {
        "mode": mode,
        "granularity": granularity,
        "views": timeline_matrices(handle, buckets, spec),
    }


def parse_tweet_target(value) -> dict:
    """Normalize a tweet-panel target: "all", {"keyword": k}, or
    {"cell": [a, b]}."""
    if value == "all" or value is None:
        return {"type": "all"}
    if isinstance(value, dict) and set(value) == {"keyword"} and isinstance(value["keyword"], str):
        return {"type": "keyword", "keyword": value["keyword"]}
    if (
        isinstance(value, dict)
        and set(value) == {"cell"}
        and isinstance(value["cell"], (list, tuple))
        and len(value["cell"]) == 2
        and all(isinstance(k, str) for k in value["cell"])
    ):
        return {"type": "cell", "a": value["cell"][0], "b": value["cell"][1]}
    raise QueryValidationError(['target: expected "all", {"keyword": k}, or {"cell": [a, b]}'])


def query_tweets(
    handle: CorpusHandle,
    spec: QuerySpec,
    target="all",
    offset: int = 0,
    limit: int = 50,
) -> dict:
    """Page of records for the tweet panel.

    Scope is the spec's record scope, optionally restricted to records
    containing a keyword or both endpoints of a cell. A target keyword
    absent from the current matrix yields an empty page with total 0.
    Items are ordered newest first (ties by id) and annotated with the
    matrix keywords they contain.
    """
    errors = []
    if not isinstance(offset, int) or isinstance(offset, bool) or offset < 0:
        errors.append("offset: must be an integer >= 0")
    if not isinstance(limit, int) or isinstance(limit, bool) or not 1 <= limit <= MAX_TWEET_PAGE:
        errors.append(f"limit: must be an integer in [1, {MAX_TWEET_PAGE}]")
    if errors:
        raise QueryValidationError(errors)
    target = parse_tweet_target(target)

    records, window = _scope(handle, spec)
    view = _evaluate(records, spec, window)
    texts = [kw["text"] for kw in view["keywords"]]
    in_matrix = set(texts)

    if target["type"] == "keyword":
        if target["keyword"] not in in_matrix:
            records = []
        else:
            records = [r for r in records if target["keyword"] in r.keyword_texts]
    elif target["type"] == "cell":
        if target["a"] not in in_matrix or target["b"] not in in_matrix:
            records = []
        else:
            records = [
                r
                for r in records
                if target["a"] in r.keyword_texts and target["b"] in r.keyword_texts
            ]

    ordered = sorted(records, key=lambda r: (-int(r.timestamp.timestamp()), r.id))
    page = ordered[offset : offset + limit]
    return {
        "total": len(ordered),
        "offset": offset,
        "limit": limit,
        "items": [
            {
                "id": r.id,
                "text": r.text,
                "timestamp": format_utc(r.timestamp),
                "polarity": r.sentiment.polarity,
                "confidence": r.sentiment.confidence,
                "matched_keywords": [t for t in texts if t in r.keyword_texts],
            }
            for r in page
        ],
    }
