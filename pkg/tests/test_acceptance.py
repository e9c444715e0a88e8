"""Acceptance suite: one test per criterion, library + CLI + HTTP only.

Each test prints an ``ACCEPTANCE PASS`` line on success (visible with
``pytest -v -s`` or in the captured output summary).
"""

import random
import time

import pytest
from fastapi.testclient import TestClient

from conftest import FIXTURE_JSONL, GOLDEN_DIR, make_record, utc
from kre.analytics import (
    SortSpec,
    keyword_stats,
    relation_matrix,
    sort_keywords,
    top_k,
    view_to_json,
)
from kre.cli import main as cli_main
from kre.corpus import CorpusHandle, filter_time
from kre.query import QuerySpec, full_window, query_matrix, query_timeline
from kre.server import create_app
from kre.textproc import BigramJaccard, word_similarity
from kre.timeline import make_buckets
from oracles import oracle_pair_counts, oracle_pair_counts_indexed, simplify

PASS = "ACCEPTANCE PASS:"


def random_handle(rng, max_records=1000, max_keywords=50):
    vocabulary = [f"kw{i:02d}" for i in range(rng.randrange(2, max_keywords + 1))]
    kinds = ("hashtag", "noun", "verb")
    records = []
    for i in range(rng.randrange(1, max_records + 1)):
        chosen = rng.sample(vocabulary, rng.randrange(0, min(8, len(vocabulary)) + 1))
        records.append(
            make_record(
                f"r{i:04d}",
                utc(2016, 7, 1 + rng.randrange(0, 6), rng.randrange(0, 24),
                    rng.randrange(0, 60), rng.randrange(0, 60)),
                [(kw, rng.choice(kinds)) for kw in chosen],
                polarity=rng.choice(("positive", "neutral", "negative")),
                confidence=float(rng.randrange(0, 101)),
            )
        )
    records.sort(key=lambda r: (r.timestamp, r.id))
    time_range = (records[0].timestamp, max(r.timestamp for r in records)) if records else None
    distinct = {t for r in records for t in r.keyword_texts}
    return CorpusHandle(records=records, time_range=time_range,
                        distinct_keyword_count=len(distinct))


def test_oracle_equivalence_100_random_corpora():
    """relation_matrix(cooccurrence) matches brute-force pair counting
    on 100 randomized corpora (<= 1000 records, <= 50 keywords) in
    under 60 seconds; sentiment counts conserve along the way."""
    started = time.monotonic()
    rng = random.Random(20160701)
    conservation_checks = 0
    for round_no in range(100):
        handle = random_handle(rng)
        simple = simplify(handle.records)
        stats = keyword_stats(handle.records)
        for stat in stats:
            assert sum(stat.sentiment_counts) == stat.frequency
            conservation_checks += 1
        top = top_k(stats, 50)
        matrix = relation_matrix(handle.records, top)
        texts = [s.text for s in matrix.keywords]
        expected = oracle_pair_counts_indexed(simple, texts)
        if round_no < 3:  # cross-check the two oracle formulations
            assert expected == oracle_pair_counts(simple, texts)
        got = {
            frozenset((texts[i], texts[j])): int(cell.value)
            for (i, j), cell in matrix.cells.items()
        }
        assert got == expected
        for (i, j), cell in matrix.cells.items():
            assert cell.value == cell.tweet_count > 0
        assert matrix.max_value == max((c.value for c in matrix.cells.values()), default=0)
    elapsed = time.monotonic() - started
    assert elapsed < 60.0, f"oracle suite took {elapsed:.1f}s"
    assert conservation_checks > 1000
    print(f"{PASS} oracle equivalence (100 corpora, {elapsed:.1f}s, "
          f"{conservation_checks} conservation checks)")


def test_timeline_algebra_on_fixture(fixture_handle):
    """Day-granularity bucket algebra over the bundled 6-day fixture."""
    window = full_window(fixture_handle)
    discrete = make_buckets(*window, "day", "discrete")
    accumulative = make_buckets(*window, "day", "accumulative")
    overlapping = make_buckets(*window, "day", "overlapping")
    assert len(discrete) == len(accumulative) == len(overlapping) == 6

    in_range = {r.id for r in filter_time(fixture_handle.records, *window)}
    discrete_sets = [
        {r.id for r in filter_time(fixture_handle.records, b.start, b.end)} for b in discrete
    ]
    assert set().union(*discrete_sets) == in_range
    for i in range(len(discrete_sets)):
        for j in range(i + 1, len(discrete_sets)):
            assert discrete_sets[i].isdisjoint(discrete_sets[j])

    running = set()
    for i, bucket in enumerate(accumulative):
        running |= discrete_sets[i]
        got = {r.id for r in filter_time(fixture_handle.records, bucket.start, bucket.end)}
        assert got == running

    # overlapping bucket 1 reaches back exactly 6h into day 1 (18:00)
    assert overlapping[1].start == utc(2016, 7, 1, 18)
    assert overlapping[1].end == utc(2016, 7, 3)
    for i in range(1, len(overlapping)):
        got = {
            r.id
            for r in filter_time(fixture_handle.records, overlapping[i].start, overlapping[i].end)
        }
        quarter = {
            r.id
            for r in filter_time(fixture_handle.records,
                                 overlapping[i].start, discrete[i].start)
        }
        assert got == discrete_sets[i] | quarter
    first = {r.id for r in filter_time(fixture_handle.records,
                                       overlapping[0].start, overlapping[0].end)}
    assert first == discrete_sets[0]

    summary = query_matrix(fixture_handle, QuerySpec())
    timeline = query_timeline(fixture_handle, QuerySpec(), "accumulative", "day")
    assert view_to_json(timeline["views"][-1]) == view_to_json(summary)
    print(f"{PASS} timeline algebra (partition, accumulation, 18:00 overlap, "
          "final view == summary)")


def test_sentiment_conservation_in_emitted_views(fixture_handle):
    """positive + neutral + negative == frequency for every keyword in
    every emitted view, randomized suite included."""
    rng = random.Random(404)
    views = [query_matrix(fixture_handle, QuerySpec(node_count=50))]
    for mode in ("discrete", "accumulative", "overlapping"):
        views.extend(query_timeline(fixture_handle, QuerySpec(), mode, "day")["views"])
    for _ in range(20):
        handle = random_handle(rng, max_records=300)
        views.append(query_matrix(handle, QuerySpec()))
    checked = 0
    for view in views:
        for kw in view["keywords"]:
            sentiment = kw["sentiment"]
            total = sentiment["positive"] + sentiment["neutral"] + sentiment["negative"]
            assert total == kw["frequency"]
            checked += 1
    assert checked > 300
    print(f"{PASS} sentiment conservation ({checked} keyword stats across {len(views)} views)")


def test_navigation_equivalence_50_random_triples():
    """Node-then-node navigation, one-shot navigation, and cell
    navigation produce byte-identical responses."""
    from kre.analytics import drill_down

    rng = random.Random(1234)
    tested = 0
    while tested < 50:
        handle = random_handle(rng, max_records=300, max_keywords=20)
        pairs = set()
        for record in handle.records:
            kws = sorted(record.keyword_texts)
            for i in range(len(kws)):
                for j in range(i + 1, len(kws)):
                    pairs.add((kws[i], kws[j]))
        if not pairs:
            continue
        a, b = sorted(pairs)[rng.randrange(len(pairs))]
        window = full_window(handle)

        direct = query_matrix(handle, QuerySpec(time_range=window, navigation=(a, b)))
        # node-then-node: drill into a first, then b, then evaluate
        stepped_records = drill_down(drill_down(handle.records, [a]), [b])
        sub = CorpusHandle(
            records=stepped_records,
            time_range=handle.time_range,
            distinct_keyword_count=handle.distinct_keyword_count,
        )
        stepwise = query_matrix(sub, QuerySpec(time_range=window))
        # cell navigation appends both keywords at once (other order)
        cellwise = query_matrix(handle, QuerySpec(time_range=window, navigation=(b, a)))

        assert view_to_json(direct) == view_to_json(stepwise) == view_to_json(cellwise)
        tested += 1
    print(f"{PASS} navigation equivalence (50 random (corpus, a, b) triples)")


def test_determinism_ingest_api_golden(fixture_handle, tmp_path):
    """Same-seed ingests are byte-identical; repeated API calls are
    byte-identical; the fixture's default view matches the golden file."""
    first, second = tmp_path / "one.snap", tmp_path / "two.snap"
    assert cli_main(["ingest", "--input", str(FIXTURE_JSONL), "--out", str(first),
                     "--seed", "42"]) == 0
    assert cli_main(["ingest", "--input", str(FIXTURE_JSONL), "--out", str(second),
                     "--seed", "42"]) == 0
    assert first.read_bytes() == second.read_bytes()

    client = TestClient(create_app(fixture_handle))
    payloads = [
        ("/api/matrix", {}),
        ("/api/matrix", {"relation_kind": "word_similarity", "node_count": 15}),
        ("/api/timeline", {"mode": "overlapping", "granularity": "day"}),
        ("/api/tweets", {"target": {"keyword": "eu"}, "limit": 25}),
    ]
    for route, payload in payloads:
        one = client.post(route, json=payload)
        two = client.post(route, json=payload)
        assert one.status_code == two.status_code == 200
        assert one.content == two.content

    golden = (GOLDEN_DIR / "fixture_default_matrix.json").read_bytes()
    assert client.post("/api/matrix", json={}).content == golden
    assert view_to_json(query_matrix(fixture_handle, QuerySpec())) == golden
    print(f"{PASS} determinism (snapshot bytes, repeated responses, golden match)")


def test_filter_soundness_random_pct_ranges(fixture_handle):
    """Every returned cell satisfies lo <= pct <= hi; a maximum cell is
    exactly 100."""
    rng = random.Random(55)
    handles = [fixture_handle] + [random_handle(rng, max_records=300) for _ in range(5)]
    checked_cells = 0
    for handle in handles:
        unfiltered = query_matrix(handle, QuerySpec())
        if unfiltered["cells"]:
            assert max(cell["pct"] for cell in unfiltered["cells"]) == 100.0
        for _ in range(10):
            lo = rng.randrange(0, 101)
            hi = rng.randrange(lo, 101)
            view = query_matrix(handle, QuerySpec(pct_range=(float(lo), float(hi))))
            for cell in view["cells"]:
                assert lo <= cell["pct"] <= hi
                checked_cells += 1
        pinned = query_matrix(handle, QuerySpec(pct_range=(100.0, 100.0)))
        for cell in pinned["cells"]:
            assert cell["pct"] == 100.0
    assert checked_cells > 100
    print(f"{PASS} filter soundness ({checked_cells} cells across random ranges)")


def test_sort_contracts(fixture_handle):
    """relation_sum ordering matches an independent incident-sum
    computation; all three sorts are permutations; ties lexicographic."""
    records = fixture_handle.records
    stats = keyword_stats(records)
    top = top_k(stats, 20)
    matrix = relation_matrix(records, top)
    n = len(matrix.keywords)
    texts = [s.text for s in matrix.keywords]

    for key in ("alphabetical", "frequency", "relation_sum"):
        for direction in ("ascending", "descending"):
            perm = sort_keywords(matrix, SortSpec(key, direction))
            assert sorted(perm) == list(range(n))

    # independent incident sums from the raw cell map
    sums = {text: 0.0 for text in texts}
    for (i, j), cell in matrix.cells.items():
        sums[texts[i]] += cell.value
        sums[texts[j]] += cell.value
    perm = sort_keywords(matrix, SortSpec("relation_sum", "descending"))
    ordered = [texts[i] for i in perm]
    assert ordered == sorted(texts, key=lambda t: (-sums[t], t))

    alpha = sort_keywords(matrix, SortSpec("alphabetical", "ascending"))
    assert [texts[i] for i in alpha] == sorted(texts)

    # frequency ties in the fixture resolve by ascending text
    freq = {s.text: s.frequency for s in top}
    by_frequency = sort_keywords(matrix, SortSpec("frequency", "descending"))
    assert [texts[i] for i in by_frequency] == sorted(texts, key=lambda t: (-freq[t], t))
    print(f"{PASS} sort contracts (incident sums, permutations, lexicographic ties)")


def test_similarity_defaults():
    """Pinned bigram-Jaccard values and randomized properties."""
    assert word_similarity("brexit", "brexiteer") == 0.625
    assert word_similarity("brexiteer", "brexit") == 0.625
    rng = random.Random(8)
    provider = BigramJaccard()
    alphabet = "abcdefghijklmnopqrstuvwxyz"
    for _ in range(1000):
        a = "".join(rng.choices(alphabet, k=rng.randrange(1, 15)))
        b = "".join(rng.choices(alphabet, k=rng.randrange(1, 15)))
        ab = provider.similarity(a, b)
        assert ab == provider.similarity(b, a)
        assert 0.0 <= ab <= 1.0
        assert provider.similarity(a, a) == 1.0
        assert provider.similarity(b, b) == 1.0
    print(f"{PASS} similarity defaults (pinned 0.625, symmetry, self-1, range)")
