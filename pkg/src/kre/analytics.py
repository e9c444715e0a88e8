"""Keyword statistics, relation matrices, sorting, and drill-down.

Everything here is a pure function over immutable inputs: independent
queries can be evaluated concurrently. Keyword identity is the
normalized text alone; a record "contains" a keyword when any of its
occurrences carries that text, regardless of kind. All orderings break
ties by ascending keyword text so output is fully deterministic.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, replace
from datetime import datetime
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .corpus import Record
from .errors import InvalidFilterError, InvalidParameterError, InvalidRangeError
from .textproc import (
    ALL_KINDS,
    NEGATIVE,
    NEUTRAL,
    POSITIVE,
    SimilarityProvider,
    default_similarity,
)
from .timeutil import format_utc

COOCCURRENCE = "cooccurrence"
WORD_SIMILARITY = "word_similarity"
RELATION_KINDS = (COOCCURRENCE, WORD_SIMILARITY)

SORT_ALPHABETICAL = "alphabetical"
SORT_FREQUENCY = "frequency"
SORT_RELATION_SUM = "relation_sum"
SORT_KEYS = (SORT_ALPHABETICAL, SORT_FREQUENCY, SORT_RELATION_SUM)

ASCENDING = "ascending"
DESCENDING = "descending"


@dataclass(frozen=True)
class KeywordStat:
    """Aggregate for one keyword: record frequency, sentiment split,
    and mean confidence over the counted records."""

    text: str
    kinds: frozenset[str]
    frequency: int
    sentiment_counts: tuple[int, int, int]  # (positive, neutral, negative)
    avg_confidence: float


@dataclass(frozen=True)
class Cell:
    value: float  # co-occurrence count or similarity score, always > 0 when stored
    tweet_count: int  # records containing both keywords


@dataclass(frozen=True)
class SortSpec:
    key: str = SORT_FREQUENCY
    direction: str = DESCENDING


@dataclass(frozen=True)
class RelationMatrix:
    """Sparse symmetric relation matrix over an ordered keyword list.

    Only upper-triangle (i < j) cells are stored; the diagonal is
    undefined. ``max_value`` is the maximum stored cell value (0 when
    there are no cells).
    """

    keywords: tuple[KeywordStat, ...]
    relation_kind: str
    cells: dict[tuple[int, int], Cell]
    max_value: float
    record_count: int
    time_range: Optional[tuple[datetime, datetime]] = None

    def cell(self, i: int, j: int) -> Optional[Cell]:
        """Symmetric lookup; (i, j) and (j, i) are the same cell."""
        if i == j:
            return None
        return self.cells.get((i, j) if i < j else (j, i))

    def with_cells(self, cells: dict[tuple[int, int], Cell]) -> "RelationMatrix":
        max_value = max((c.value for c in cells.values()), default=0)
        return replace(self, cells=dict(cells), max_value=max_value)


def _polarity_index(polarity: str) -> int:
    return {POSITIVE: 0, NEUTRAL: 1, NEGATIVE: 2}[polarity]


def keyword_stats(records: Sequence[Record], kind_filter: Iterable[str] = ALL_KINDS) -> list[KeywordStat]:
    """One stat per distinct keyword with at least one occurrence whose
    kind is in ``kind_filter``.

    Frequency counts *records*, not occurrences: a keyword repeated in
    one record counts once, and the record's polarity lands in exactly
    one sentiment bucket, so the counts always sum to the frequency.
    ``kinds`` collects the filter-eligible kinds observed. Returned
    sorted by text.
    """
    kind_filter = frozenset(kind_filter)
    if not kind_filter:
        raise InvalidFilterError("keyword kind filter must not be empty")
    unknown = kind_filter - set(ALL_KINDS)
    if unknown:
        raise InvalidFilterError(f"unknown keyword kinds: {sorted(unknown)}")

    freq: dict[str, int] = {}
    kinds: dict[str, set[str]] = {}
    sentiment: dict[str, list[int]] = {}
    confidence: dict[str, float] = {}
    for record in records:
        eligible: dict[str, set[str]] = {}
        for occ in record.occurrences:
            if occ.kind in kind_filter:
                eligible.setdefault(occ.text, set()).add(occ.kind)
        if not eligible:
            continue
        pol = _polarity_index(record.sentiment.polarity)
        for text, observed in eligible.items():
            freq[text] = freq.get(text, 0) + 1
            kinds.setdefault(text, set()).update(observed)
            sentiment.setdefault(text, [0, 0, 0])[pol] += 1
            confidence[text] = confidence.get(text, 0.0) + record.sentiment.confidence
    return [
        KeywordStat(
            text=text,
            kinds=frozenset(kinds[text]),
            frequency=freq[text],
            sentiment_counts=tuple(sentiment[text]),
            avg_confidence=confidence[text] / freq[text],
        )
        for text in sorted(freq)
    ]


def top_k(stats: Sequence[KeywordStat], k: int = 20) -> list[KeywordStat]:
    """The k highest-frequency keywords, descending, ties by ascending text."""
    if k < 1:
        raise InvalidParameterError(f"k must be >= 1, got {k}")
    return sorted(stats, key=lambda s: (-s.frequency, s.text))[:k]


def relation_matrix(
    records: Sequence[Record],
    keywords: Sequence[KeywordStat],
    kind: str = COOCCURRENCE,
    similarity: Optional[SimilarityProvider] = None,
    time_range: Optional[tuple[datetime, datetime]] = None,
) -> RelationMatrix:
    """Build the relation matrix for an ordered keyword list.

    Co-occurrence: cell value = tweet_count = number of records
    containing both keywords. Word similarity: cell value = provider
    score (cell omitted when 0), tweet_count still the co-occurring
    record count. Cells with value 0 are never stored.
    """
    if kind not in RELATION_KINDS:
        raise InvalidParameterError(f"unknown relation kind {kind!r}")
    index = {stat.text: i for i, stat in enumerate(keywords)}
    pair_counts: dict[tuple[int, int], int] = {}
    for record in records:
        present = sorted(index[t] for t in record.keyword_texts if t in index)
        for pair in combinations(present, 2):
            pair_counts[pair] = pair_counts.get(pair, 0) + 1

    cells: dict[tuple[int, int], Cell] = {}
    if kind == COOCCURRENCE:
        for pair, count in pair_counts.items():
            cells[pair] = Cell(value=count, tweet_count=count)
    else:
        if similarity is None:
            similarity = default_similarity()
        for i, j in combinations(range(len(keywords)), 2):
            score = similarity.similarity(keywords[i].text, keywords[j].text)
            if score > 0:
                cells[(i, j)] = Cell(value=score, tweet_count=pair_counts.get((i, j), 0))
    max_value = max((c.value for c in cells.values()), default=0)
    return RelationMatrix(
        keywords=tuple(keywords),
        relation_kind=kind,
        cells=cells,
        max_value=max_value,
        record_count=len(records),
        time_range=time_range,
    )


def _incident_sums(matrix: RelationMatrix) -> list[float]:
    sums = [0.0] * len(matrix.keywords)
    for (i, j), cell in matrix.cells.items():
        sums[i] += cell.value
        sums[j] += cell.value
    return sums


def sort_keywords(matrix: RelationMatrix, spec: SortSpec = SortSpec()) -> list[int]:
    """Permutation of keyword indices under the sort spec.

    Ties always break by ascending text. The permutation is meant to
    reorder rows and columns identically (see :func:`permute_matrix`).
    """
    if spec.key not in SORT_KEYS:
        raise InvalidParameterError(f"unknown sort key {spec.key!r}")
    if spec.direction not in (ASCENDING, DESCENDING):
        raise InvalidParameterError(f"unknown sort direction {spec.direction!r}")
    texts = [s.text for s in matrix.keywords]
    if spec.key == SORT_ALPHABETICAL:
        return sorted(range(len(texts)), key=lambda i: texts[i], reverse=spec.direction == DESCENDING)
    if spec.key == SORT_FREQUENCY:
        values = [s.frequency for s in matrix.keywords]
    else:
        values = _incident_sums(matrix)
    if spec.direction == DESCENDING:
        return sorted(range(len(texts)), key=lambda i: (-values[i], texts[i]))
    return sorted(range(len(texts)), key=lambda i: (values[i], texts[i]))


def permute_matrix(matrix: RelationMatrix, perm: Sequence[int]) -> RelationMatrix:
    """Reorder rows and columns identically under a permutation.

    ``perm[new_position] = old_index``, as returned by sort_keywords.
    """
    position = {old: new for new, old in enumerate(perm)}
    keywords = tuple(matrix.keywords[old] for old in perm)
    cells = {}
    for (i, j), cell in matrix.cells.items():
        ni, nj = position[i], position[j]
        cells[(ni, nj) if ni < nj else (nj, ni)] = cell
    return replace(matrix, keywords=keywords, cells=cells)


def relation_pct(matrix: RelationMatrix) -> dict[tuple[int, int], float]:
    """Cell percentages: 100 * value / max_value.

    Undefined (empty map) when the matrix has no cells. A cell at the
    maximum is exactly 100.
    """
    if matrix.max_value <= 0:
        return {}
    return {key: 100.0 * cell.value / matrix.max_value for key, cell in matrix.cells.items()}


def filter_cells(matrix: RelationMatrix, lo: float, hi: float) -> dict[tuple[int, int], Cell]:
    """Cells whose relation percentage lies in [lo, hi]. Keywords are
    unaffected; a keyword keeps its node even if all its cells drop."""
    if not (0 <= lo <= hi <= 100):
        raise InvalidRangeError(f"percentage range [{lo}, {hi}] is not within [0, 100] or inverted")
    pct = relation_pct(matrix)
    return {key: matrix.cells[key] for key in matrix.cells if lo <= pct[key] <= hi}


def drill_down(records: Sequence[Record], keywords_all: Sequence[str]) -> list[Record]:
    """Records containing every keyword in ``keywords_all`` (any kind),
    order preserved. Conjunction: composing drill-downs equals one
    drill-down over the concatenated keyword list."""
    if not keywords_all:
        raise InvalidFilterError("drill-down requires at least one keyword")
    required = frozenset(keywords_all)
    return [r for r in records if required <= r.keyword_texts]


# -- export -----------------------------------------------------------------

_KIND_ORDER = {kind: i for i, kind in enumerate(ALL_KINDS)}


def build_matrix_view(
    matrix: RelationMatrix,
    norm_max: Optional[float] = None,
) -> dict:
    """Assemble the exportable MatrixView mapping.

    ``norm_max`` is the normalization base for cell percentages; it
    defaults to the matrix's own max but callers that filtered cells
    pass the pre-filter maximum so percentages keep their meaning.
    """
    if norm_max is None:
        norm_max = matrix.max_value
    time_range = None
    if matrix.time_range is not None:
        time_range = {
            "start": format_utc(matrix.time_range[0]),
            "end": format_utc(matrix.time_range[1]),
        }
    return {
        "relation_kind": matrix.relation_kind,
        "time_range": time_range,
        "record_count": matrix.record_count,
        "keywords": [
            {
                "text": stat.text,
                "kinds": sorted(stat.kinds, key=_KIND_ORDER.__getitem__),
                "frequency": stat.frequency,
                "sentiment": {
                    "positive": stat.sentiment_counts[0],
                    "neutral": stat.sentiment_counts[1],
                    "negative": stat.sentiment_counts[2],
                },
                "avg_confidence": stat.avg_confidence,
            }
            for stat in matrix.keywords
        ],
        "cells": [
            {
                "i": i,
                "j": j,
                "value": cell.value,
                "pct": 100.0 * cell.value / norm_max if norm_max > 0 else 0.0,
                "tweet_count": cell.tweet_count,
            }
            for (i, j), cell in sorted(matrix.cells.items())
        ],
    }


def view_to_json(view) -> bytes:
    """Canonical JSON bytes for a view (or any export payload)."""
    return (json.dumps(view, ensure_ascii=False, separators=(",", ":")) + "\n").encode("utf-8")


def view_to_csv(view: dict) -> str:
    """Dense square matrix of cell values as CSV.

    Header row and column carry the keyword texts in view order; the
    diagonal is left empty; absent relations are 0.
    """
    texts = [kw["text"] for kw in view["keywords"]]
    n = len(texts)
    dense = [[0] * n for _ in range(n)]
    for cell in view["cells"]:
        dense[cell["i"]][cell["j"]] = cell["value"]
        dense[cell["j"]][cell["i"]] = cell["value"]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([""] + texts)
    for i, text in enumerate(texts):
        row = [text]
        for j in range(n):
            row.append("" if i == j else dense[i][j])
        writer.writerow(row)
    return buf.getvalue()
