import json
from datetime import datetime, timezone
from pathlib import Path

import pytest

from kre.corpus import IngestOptions, Record, load_corpus
from kre.textproc import KeywordOccurrence, Sentiment

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURE_JSONL = REPO_ROOT / "fixtures" / "tweets_6day_500.jsonl"
GOLDEN_DIR = Path(__file__).resolve().parent / "golden"

FIXTURE_SEED = 42


def utc(*args) -> datetime:
    return datetime(*args, tzinfo=timezone.utc)


def make_record(rec_id, timestamp, keywords, polarity="neutral", confidence=100.0):
    """Synthetic record with one occurrence per keyword text.

    ``keywords`` may be strings (kind defaults to noun) or (text, kind)
    pairs. Spans are dummies; analytics never inspects them.
    """
    occurrences = []
    for kw in keywords:
        text, kind = kw if isinstance(kw, tuple) else (kw, "noun")
        occurrences.append(KeywordOccurrence(text=text, kind=kind, span=(0, 0)))
    return Record(
        id=rec_id,
        text=" ".join(o.text for o in occurrences),
        timestamp=timestamp,
        lang="en",
        is_retweet=False,
        sentiment=Sentiment(polarity, confidence),
        occurrences=occurrences,
    )


def fixture_lines():
    """Raw parsed JSONL lines of the bundled fixture (independent scan)."""
    with FIXTURE_JSONL.open(encoding="utf-8") as fh:
        return [json.loads(line) for line in fh if line.strip()]


@pytest.fixture(scope="session")
def fixture_handle():
    return load_corpus(FIXTURE_JSONL, IngestOptions(seed=FIXTURE_SEED))
