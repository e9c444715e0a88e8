import pytest

from conftest import utc
from kre.errors import InvalidParameterError, InvalidRangeError
from kre.timeline import (
    ACCUMULATIVE,
    DISCRETE,
    GRANULARITIES,
    MODES,
    OVERLAPPING,
    floor_to_unit,
    make_buckets,
)

JUL1 = utc(2016, 7, 1)
JUL7 = utc(2016, 7, 7)


class TestMakeBucketsDaily:
    def test_six_discrete_day_buckets(self):
        buckets = make_buckets(JUL1, JUL7, "day", DISCRETE)
        assert len(buckets) == 6
        for i, bucket in enumerate(buckets):
            assert bucket.index == i
            assert bucket.start == utc(2016, 7, 1 + i)
            assert bucket.end == utc(2016, 7, 2 + i)

    def test_overlapping_second_bucket_starts_1800(self):
        # covers day 2 plus the last quarter (6h) of day 1
        buckets = make_buckets(JUL1, JUL7, "day", OVERLAPPING)
        assert buckets[0].window == (utc(2016, 7, 1), utc(2016, 7, 2))
        assert buckets[1].window == (utc(2016, 7, 1, 18), utc(2016, 7, 3))
        assert buckets[2].window == (utc(2016, 7, 2, 18), utc(2016, 7, 4))

    def test_accumulative_third_bucket_spans_three_days(self):
        buckets = make_buckets(JUL1, JUL7, "day", ACCUMULATIVE)
        assert buckets[2].window == (utc(2016, 7, 1), utc(2016, 7, 4))
        assert all(b.start == JUL1 for b in buckets)
        assert [b.end for b in buckets] == [utc(2016, 7, d) for d in range(2, 8)]

    def test_same_bucket_count_across_modes(self):
        counts = {mode: len(make_buckets(JUL1, JUL7, "day", mode)) for mode in MODES}
        assert set(counts.values()) == {6}


class TestCalendarAlignment:
    def test_start_floors_to_unit(self):
        buckets = make_buckets(utc(2016, 7, 1, 14, 30), utc(2016, 7, 3), "day", DISCRETE)
        assert buckets[0].start == utc(2016, 7, 1)

    def test_last_bucket_clipped_at_end(self):
        buckets = make_buckets(JUL1, utc(2016, 7, 2, 12), "day", DISCRETE)
        assert buckets[-1].window == (utc(2016, 7, 2), utc(2016, 7, 2, 12))

    def test_week_starts_monday(self):
        # 2016-07-01 is a Friday; its week floors to Monday 2016-06-27
        assert floor_to_unit(utc(2016, 7, 1, 9), "week") == utc(2016, 6, 27)
        buckets = make_buckets(utc(2016, 7, 1), utc(2016, 7, 20), "week", DISCRETE)
        assert buckets[0].start == utc(2016, 6, 27)
        assert all(b.start.weekday() == 0 for b in buckets)

    def test_month_boundaries(self):
        buckets = make_buckets(utc(2016, 1, 15), utc(2016, 4, 1), "month", DISCRETE)
        assert [b.window for b in buckets] == [
            (utc(2016, 1, 1), utc(2016, 2, 1)),
            (utc(2016, 2, 1), utc(2016, 3, 1)),
            (utc(2016, 3, 1), utc(2016, 4, 1)),
        ]

    def test_hour_quarter_is_15_minutes(self):
        buckets = make_buckets(utc(2016, 7, 1, 10), utc(2016, 7, 1, 13), "hour", OVERLAPPING)
        assert buckets[1].window == (utc(2016, 7, 1, 10, 45), utc(2016, 7, 1, 12))

    def test_week_quarter_is_42_hours(self):
        buckets = make_buckets(utc(2016, 6, 27), utc(2016, 7, 11), "week", OVERLAPPING)
        # quarter of a week = 42h before Monday 00:00 -> Saturday 06:00
        assert buckets[1].start == utc(2016, 7, 2, 6)

    def test_month_quarter_uses_previous_month_length(self):
        buckets = make_buckets(utc(2016, 2, 1), utc(2016, 4, 1), "month", OVERLAPPING)
        # Feb 2016 has 29 days; quarter = 7.25 days -> Mar 1 minus 174h
        assert buckets[1].start == utc(2016, 2, 22, 18)
        buckets = make_buckets(utc(2016, 4, 1), utc(2016, 6, 1), "month", OVERLAPPING)
        # Apr has 30 days; quarter = 7.5 days before May 1 -> Apr 23 12:00
        assert buckets[1].start == utc(2016, 4, 23, 12)


class TestEdgeCases:
    def test_empty_range_rejected(self):
        with pytest.raises(InvalidRangeError):
            make_buckets(JUL1, JUL1, "day", DISCRETE)

    def test_subunit_range_single_clipped_bucket(self):
        buckets = make_buckets(utc(2016, 7, 1, 3), utc(2016, 7, 1, 9), "day", DISCRETE)
        assert len(buckets) == 1
        assert buckets[0].window == (utc(2016, 7, 1), utc(2016, 7, 1, 9))

    def test_unknown_granularity_or_mode(self):
        with pytest.raises(InvalidParameterError):
            make_buckets(JUL1, JUL7, "fortnight", DISCRETE)
        with pytest.raises(InvalidParameterError):
            make_buckets(JUL1, JUL7, "day", "sliding")

    def test_all_granularities_produce_buckets(self):
        for granularity in GRANULARITIES:
            buckets = make_buckets(utc(2016, 7, 1), utc(2016, 9, 1), granularity, DISCRETE)
            assert buckets
            for left, right in zip(buckets, buckets[1:]):
                assert left.end == right.start
