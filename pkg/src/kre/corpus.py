"""Corpus ingestion, filtering, anonymization, and snapshot persistence.

A corpus is loaded from a JSONL file (one record object per line),
filtered by language and retweet status, anonymized with seeded ids,
enriched with keyword occurrences and sentiment, and frozen into an
immutable :class:`CorpusHandle`. The handle can be persisted to a
versioned snapshot file that round-trips bit-exactly, so serving never
re-runs text processing.

Ingestion is single-writer; a completed handle is immutable and safe to
share across concurrent readers.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Optional, Sequence

from .errors import IngestError, InternalError, InvalidRangeError, SnapshotError
from .textproc import (
    KeywordOccurrence,
    Sentiment,
    SentimentProvider,
    TaggerProvider,
    classify_sentiment,
    extract_keywords,
)
from .timeutil import format_utc, parse_utc

SNAPSHOT_FORMAT = "kre-snapshot"
SNAPSHOT_VERSION = 1

REQUIRED_KEYS = ("id", "text", "created_at", "lang", "is_retweet")


@dataclass
class Record:
    """One ingested short text with its derived annotations."""

    id: str
    text: str
    timestamp: datetime
    lang: str
    is_retweet: bool
    sentiment: Optional[Sentiment] = None
    occurrences: list[KeywordOccurrence] = field(default_factory=list)

    @property
    def keyword_texts(self) -> frozenset[str]:
        """Distinct normalized keyword texts in this record (any kind)."""
        cached = self.__dict__.get("_keyword_texts")
        if cached is None:
            cached = frozenset(o.text for o in self.occurrences)
            self.__dict__["_keyword_texts"] = cached
        return cached


@dataclass(frozen=True)
class IngestOptions:
    languages: frozenset[str] = frozenset({"en"})
    drop_retweets: bool = True
    anonymize: bool = True
    seed: int = 0
    malformed_threshold: float = 0.01  # fraction of lines tolerated
    tagger: Optional[TaggerProvider] = None
    sentiment: Optional[SentimentProvider] = None


@dataclass
class IngestReport:
    """Counts of what the loader kept and dropped."""

    total_lines: int = 0
    kept: int = 0
    dropped_language: int = 0
    dropped_retweet: int = 0
    malformed: list[tuple[int, str]] = field(default_factory=list)  # (line_no, reason)


@dataclass
class CorpusHandle:
    """Immutable view over a fully ingested corpus.

    ``records`` are sorted ascending by (timestamp, id); ``time_range``
    is the inclusive [min, max] timestamp pair, or None when empty.
    """

    records: list[Record]
    time_range: Optional[tuple[datetime, datetime]]
    distinct_keyword_count: int
    report: Optional[IngestReport] = None


def _parse_line(line: str, line_no: int) -> Record:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise ValueError("line is not a JSON object")
    missing = [k for k in REQUIRED_KEYS if k not in obj]
    if missing:
        raise ValueError(f"missing keys: {', '.join(missing)}")
    if not isinstance(obj["id"], str) or not obj["id"]:
        raise ValueError("id must be a non-empty string")
    if not isinstance(obj["text"], str):
        raise ValueError("text must be a string")
    if not isinstance(obj["lang"], str):
        raise ValueError("lang must be a string")
    if not isinstance(obj["is_retweet"], bool):
        raise ValueError("is_retweet must be a boolean")
    try:
        timestamp = parse_utc(obj["created_at"])
    except ValueError as exc:
        raise ValueError(f"unparseable created_at: {exc}") from None
    return Record(
        id=obj["id"],
        text=obj["text"],
        timestamp=timestamp,
        lang=obj["lang"].lower(),
        is_retweet=obj["is_retweet"],
    )


def anonymize(records: Sequence[Record], seed: int = 0) -> list[Record]:
    """Replace every record id with a fresh one from a seeded generator.

    The original-to-new mapping is not retained. Same records + same
    seed reproduce the same ids. New ids never collide with each other
    or with any original id.
    """
    rng = random.Random(seed)
    taken = {r.id for r in records}
    out = []
    for record in records:
        for _ in range(100):
            new_id = f"{rng.randrange(10**17, 10**18)}"
            if new_id not in taken:
                break
        else:
            raise InternalError("could not generate a unique id after 100 attempts")
        taken.add(new_id)
        out.append(
            Record(
                id=new_id,
                text=record.text,
                timestamp=record.timestamp,
                lang=record.lang,
                is_retweet=record.is_retweet,
                sentiment=record.sentiment,
                occurrences=record.occurrences,
            )
        )
    return out


def _build_handle(records: list[Record], report: Optional[IngestReport]) -> CorpusHandle:
    records = sorted(records, key=lambda r: (r.timestamp, r.id))
    if records:
        time_range = (records[0].timestamp, max(r.timestamp for r in records))
    else:
        time_range = None
    distinct = set()
    for record in records:
        distinct.update(record.keyword_texts)
    return CorpusHandle(
        records=records,
        time_range=time_range,
        distinct_keyword_count=len(distinct),
        report=report,
    )


def load_corpus(path, options: IngestOptions = IngestOptions()) -> CorpusHandle:
    """Load, filter, anonymize, and enrich a JSONL record file.

    Records failing the language or retweet filters are counted in the
    report, not stored. Malformed lines (bad JSON, missing keys,
    unparseable timestamps, duplicate ids) are collected; ingestion
    fails when they exceed ``options.malformed_threshold`` of all
    non-empty lines. An empty result is a valid empty corpus.

    Deterministic given (file bytes, options, seed).
    """
    path = Path(path)
    try:
        raw = path.read_text("utf-8")
    except OSError as exc:
        raise IngestError(f"cannot read {path}: {exc}") from exc

    report = IngestReport()
    kept: list[Record] = []
    seen_ids: set[str] = set()
    for line_no, line in enumerate(raw.splitlines(), start=1):
        if not line.strip():
            continue
        report.total_lines += 1
        try:
            record = _parse_line(line, line_no)
            if record.id in seen_ids:
                raise ValueError(f"duplicate id {record.id!r}")
            seen_ids.add(record.id)
        except ValueError as exc:
            report.malformed.append((line_no, str(exc)))
            continue
        if record.lang not in options.languages:
            report.dropped_language += 1
            continue
        if options.drop_retweets and record.is_retweet:
            report.dropped_retweet += 1
            continue
        kept.append(record)

    if report.total_lines and len(report.malformed) > options.malformed_threshold * report.total_lines:
        raise IngestError(
            f"{len(report.malformed)} of {report.total_lines} lines malformed "
            f"(tolerance {options.malformed_threshold:.0%}); first: "
            f"line {report.malformed[0][0]}: {report.malformed[0][1]}"
        )

    if options.anonymize:
        kept = anonymize(kept, seed=options.seed)

    for record in kept:
        record.occurrences = extract_keywords(record.text, options.tagger)
        record.sentiment = classify_sentiment(record.text, options.sentiment)

    report.kept = len(kept)
    return _build_handle(kept, report)


def filter_time(records, start: datetime, end: datetime) -> list[Record]:
    """Records with start <= timestamp < end, order preserved."""
    if start >= end:
        raise InvalidRangeError(f"empty time window: {start!r} >= {end!r}")
    if isinstance(records, CorpusHandle):
        records = records.records
    return [r for r in records if start <= r.timestamp < end]


# -- snapshot persistence ---------------------------------------------------
#
# A snapshot is a single canonical-JSON document (sorted nothing, fixed key
# order, compact separators, trailing newline) so identical corpora always
# produce identical bytes. See README for the documented layout.


def _record_to_obj(record: Record) -> dict:
    return {
        "id": record.id,
        "text": record.text,
        "timestamp": format_utc(record.timestamp),
        "lang": record.lang,
        "is_retweet": record.is_retweet,
        "sentiment": {
            "polarity": record.sentiment.polarity,
            "confidence": record.sentiment.confidence,
        },
        "occurrences": [
            {"text": o.text, "kind": o.kind, "span": [o.span[0], o.span[1]]}
            for o in record.occurrences
        ],
    }


def _record_from_obj(obj: dict) -> Record:
    sentiment = Sentiment(
        polarity=obj["sentiment"]["polarity"],
        confidence=obj["sentiment"]["confidence"],
    )
    occurrences = [
        KeywordOccurrence(text=o["text"], kind=o["kind"], span=(o["span"][0], o["span"][1]))
        for o in obj["occurrences"]
    ]
    return Record(
        id=obj["id"],
        text=obj["text"],
        timestamp=parse_utc(obj["timestamp"]),
        lang=obj["lang"],
        is_retweet=obj["is_retweet"],
        sentiment=sentiment,
        occurrences=occurrences,
    )


def snapshot_bytes(handle: CorpusHandle) -> bytes:
    """Serialize a handle to the canonical snapshot byte sequence."""
    doc = {
        "format": SNAPSHOT_FORMAT,
        "version": SNAPSHOT_VERSION,
        "record_count": len(handle.records),
        "time_range": (
            {
                "start": format_utc(handle.time_range[0]),
                "end": format_utc(handle.time_range[1]),
            }
            if handle.time_range
            else None
        ),
        "distinct_keywords": handle.distinct_keyword_count,
        "records": [_record_to_obj(r) for r in handle.records],
    }
    return (json.dumps(doc, ensure_ascii=False, separators=(",", ":")) + "\n").encode("utf-8")


def write_snapshot(handle: CorpusHandle, path) -> None:
    Path(path).write_bytes(snapshot_bytes(handle))


def read_snapshot(path) -> CorpusHandle:
    """Load a snapshot written by :func:`write_snapshot`.

    Never re-runs text processing; occurrences and sentiment come back
    exactly as stored.
    """
    path = Path(path)
    try:
        doc = json.loads(path.read_text("utf-8"))
    except OSError as exc:
        raise SnapshotError(f"cannot read snapshot {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SnapshotError(f"snapshot {path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("format") != SNAPSHOT_FORMAT:
        raise SnapshotError(f"{path} is not a {SNAPSHOT_FORMAT} file")
    if doc.get("version") != SNAPSHOT_VERSION:
        raise SnapshotError(f"unsupported snapshot version {doc.get('version')!r}")
    try:
        records = [_record_from_obj(o) for o in doc["records"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise SnapshotError(f"snapshot {path} is corrupt: {exc}") from exc
    return _build_handle(records, report=None)
