"""Text processing: keyword extraction, sentiment, and word similarity.

Each capability sits behind a small provider interface so the rule-based
defaults bundled here (lexicon tagger, lexicon sentiment, bigram-Jaccard
similarity) can be swapped for heavier NLP backends without touching the
rest of the engine. All operations are pure and safe to call from
concurrent readers.
"""

from __future__ import annotations

import re
import string
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterable, Optional, Protocol

KIND_HASHTAG = "hashtag"
KIND_NOUN = "noun"
KIND_VERB = "verb"
ALL_KINDS = (KIND_HASHTAG, KIND_NOUN, KIND_VERB)

POSITIVE = "positive"
NEUTRAL = "neutral"
NEGATIVE = "negative"
POLARITIES = (POSITIVE, NEUTRAL, NEGATIVE)


@dataclass(frozen=True)
class KeywordOccurrence:
    """One keyword found in a text.

    ``span`` is the [start, end) byte range of the raw token in the
    UTF-8 encoding of the source text; slicing it out and normalizing
    yields ``text`` again.
    """

    text: str
    kind: str
    span: tuple[int, int]


@dataclass(frozen=True)
class Sentiment:
    polarity: str
    confidence: float  # percentage in [0, 100]


class TaggerProvider(Protocol):
    def tag(self, word: str) -> Optional[str]:
        """Return "noun", "verb", or None for a normalized word."""
        ...


class SentimentProvider(Protocol):
    def classify(self, text: str) -> Sentiment: ...


class SimilarityProvider(Protocol):
    def similarity(self, a: str, b: str) -> float: ...


# Token scanner. Order matters: URLs and mentions are consumed first so
# their fragments never surface as words. Lookarounds keep word matches
# from starting or ending inside a larger alphanumeric run ("brexit2016"
# yields no word token).
_TOKEN_RE = re.compile(
    r"""
      (?P<url>https?://\S+|www\.\S+)
    | (?P<mention>(?<!\w)@\w+)
    | (?P<hashtag>(?<!\w)\#[\w-]+)
    | (?P<word>(?<![\w@#])[^\W\d_]+(?:['-][^\W\d_]+)*(?!\w))
    """,
    re.VERBOSE,
)

_TRAILING_PUNCT = string.punctuation


def normalize_keyword(raw: str) -> str:
    """Case-fold, strip leading '#', strip trailing punctuation."""
    text = raw.casefold().lstrip("#")
    return text.rstrip(_TRAILING_PUNCT)


def _byte_offsets(text: str) -> list[int]:
    # offsets[i] = byte offset of character i; offsets[len] = total bytes
    offsets = [0]
    total = 0
    for ch in text:
        total += len(ch.encode("utf-8"))
        offsets.append(total)
    return offsets


def _scan_tokens(text: str):
    """Yield (group_name, raw_token, char_start, char_end) for each token."""
    for match in _TOKEN_RE.finditer(text):
        yield match.lastgroup, match.group(), match.start(), match.end()


def extract_keywords(text: str, tagger: Optional[TaggerProvider] = None) -> list[KeywordOccurrence]:
    """Extract keyword occurrences from a text.

    Every '#'-token becomes a hashtag occurrence. Remaining alphabetic
    tokens are passed to the tagger and kept when it answers noun or
    verb. URLs, mentions, numerals, and punctuation never produce
    keywords.
    """
    if tagger is None:
        tagger = default_tagger()
    occurrences: list[KeywordOccurrence] = []
    if not text:
        return occurrences
    if text.isascii():
        offsets = None
    else:
        offsets = _byte_offsets(text)
    for group, raw, start, end in _scan_tokens(text):
        if group == "hashtag":
            kind = KIND_HASHTAG
        elif group == "word":
            kind = tagger.tag(normalize_keyword(raw))
            if kind not in (KIND_NOUN, KIND_VERB):
                continue
        else:
            continue
        normalized = normalize_keyword(raw)
        if not normalized:
            continue
        if offsets is None:
            span = (start, end)
        else:
            span = (offsets[start], offsets[end])
        occurrences.append(KeywordOccurrence(text=normalized, kind=kind, span=span))
    return occurrences


def classify_sentiment(text: str, classifier: Optional[SentimentProvider] = None) -> Sentiment:
    if classifier is None:
        classifier = default_sentiment()
    return classifier.classify(text)


def word_similarity(a: str, b: str, provider: Optional[SimilarityProvider] = None) -> float:
    if provider is None:
        provider = default_similarity()
    return provider.similarity(a, b)


def load_wordlist(lines: Iterable[str]) -> frozenset[str]:
    """Parse a lexicon file: one lowercase word per line, '#' comments
    and blank lines ignored."""
    words = set()
    for line in lines:
        word = line.strip()
        if not word or word.startswith("#"):
            continue
        words.add(word)
    return frozenset(words)


def _load_bundled(name: str) -> frozenset[str]:
    data = resources.files(__package__).joinpath("data").joinpath(name).read_text("utf-8")
    return load_wordlist(data.splitlines())


class LexiconTagger:
    """Context-free tagger backed by bundled noun/verb word lists.

    A word present in both lists resolves to noun. The lists cover
    content words only; function words and auxiliaries are deliberately
    absent so they never become keywords.
    """

    def __init__(self, nouns: frozenset[str], verbs: frozenset[str]):
        self._nouns = nouns
        self._verbs = verbs

    def tag(self, word: str) -> Optional[str]:
        if word in self._nouns:
            return KIND_NOUN
        if word in self._verbs:
            return KIND_VERB
        return None


class LexiconSentiment:
    """Polarity from counts of positive/negative lexicon matches.

    With P positive and N negative token matches: positive if P > N,
    negative if N > P, neutral otherwise. Confidence is
    100*|P-N|/(P+N), or 100 when the text matches neither lexicon
    (confidently neutral; pinned by tests).
    """

    def __init__(self, positive: frozenset[str], negative: frozenset[str]):
        self._positive = positive
        self._negative = negative

    def classify(self, text: str) -> Sentiment:
        pos = 0
        neg = 0
        for group, raw, _, _ in _scan_tokens(text):
            if group not in ("word", "hashtag"):
                continue
            token = normalize_keyword(raw)
            if token in self._positive:
                pos += 1
            elif token in self._negative:
                neg += 1
        total = pos + neg
        if total == 0:
            return Sentiment(NEUTRAL, 100.0)
        confidence = 100.0 * abs(pos - neg) / total
        if pos > neg:
            return Sentiment(POSITIVE, confidence)
        if neg > pos:
            return Sentiment(NEGATIVE, confidence)
        return Sentiment(NEUTRAL, confidence)


class BigramJaccard:
    """Jaccard similarity of character-bigram sets.

    Identical strings score exactly 1. A single-character string uses
    its 1-gram set. A score of 0 means "no relation" downstream (the
    matrix cell is simply absent).
    """

    @staticmethod
    def _grams(s: str) -> frozenset[str]:
        if len(s) < 2:
            return frozenset({s} if s else ())
        return frozenset(s[i : i + 2] for i in range(len(s) - 1))

    def similarity(self, a: str, b: str) -> float:
        if a == b:
            return 1.0
        ga, gb = self._grams(a), self._grams(b)
        union = ga | gb
        if not union:
            return 1.0  # both empty
        return len(ga & gb) / len(union)


@lru_cache(maxsize=1)
def default_tagger() -> LexiconTagger:
    return LexiconTagger(_load_bundled("nouns.txt"), _load_bundled("verbs.txt"))


@lru_cache(maxsize=1)
def default_sentiment() -> LexiconSentiment:
    return LexiconSentiment(_load_bundled("positive.txt"), _load_bundled("negative.txt"))


@lru_cache(maxsize=1)
def default_similarity() -> BigramJaccard:
    return BigramJaccard()
