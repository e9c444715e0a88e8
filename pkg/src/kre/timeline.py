"""Time bucketing for the three timeline evolution modes.

A time range is first covered by consecutive calendar-aligned windows
(the first starts at the calendar floor of the range start, the last is
clipped at the range end). The three modes derive their buckets from
those windows:

* discrete:     bucket i is window i (pairwise disjoint, contiguous);
* accumulative: bucket i runs from the first window's start to window
                i's end;
* overlapping:  bucket i additionally reaches back over the last
                quarter of the previous window (bucket 0 is window 0).

Weeks start Monday 00:00 UTC; months are calendar months, and their
quarter-overlap uses that specific previous month's length so the
arithmetic stays calendar-exact.
"""

from __future__ import annotations

import calendar
from dataclasses import dataclass
from datetime import datetime, timedelta

from .errors import InvalidParameterError, InvalidRangeError

DISCRETE = "discrete"
ACCUMULATIVE = "accumulative"
OVERLAPPING = "overlapping"
MODES = (DISCRETE, ACCUMULATIVE, OVERLAPPING)

HOUR = "hour"
DAY = "day"
WEEK = "week"
MONTH = "month"
GRANULARITIES = (HOUR, DAY, WEEK, MONTH)


@dataclass(frozen=True)
class TimeBucket:
    index: int
    start: datetime
    end: datetime
    mode: str

    @property
    def window(self) -> tuple[datetime, datetime]:
        return (self.start, self.end)


def floor_to_unit(dt: datetime, unit: str) -> datetime:
    """Calendar floor of an instant: hour, midnight, Monday midnight, or
    first of month."""
    if unit == HOUR:
        return dt.replace(minute=0, second=0, microsecond=0)
    if unit == DAY:
        return dt.replace(hour=0, minute=0, second=0, microsecond=0)
    if unit == WEEK:
        midnight = dt.replace(hour=0, minute=0, second=0, microsecond=0)
        return midnight - timedelta(days=dt.weekday())
    if unit == MONTH:
        return dt.replace(day=1, hour=0, minute=0, second=0, microsecond=0)
    raise InvalidParameterError(f"unknown granularity {unit!r}")


def advance(dt: datetime, unit: str) -> datetime:
    """The next calendar boundary after a floored instant."""
    if unit == HOUR:
        return dt + timedelta(hours=1)
    if unit == DAY:
        return dt + timedelta(days=1)
    if unit == WEEK:
        return dt + timedelta(weeks=1)
    if unit == MONTH:
        if dt.month == 12:
            return dt.replace(year=dt.year + 1, month=1)
        return dt.replace(month=dt.month + 1)
    raise InvalidParameterError(f"unknown granularity {unit!r}")


def _quarter_of_previous(window_start: datetime, unit: str) -> timedelta:
    # Nominal quarter of the unit before window_start: 15 min, 6 h, 42 h,
    # or a quarter of the previous calendar month's length.
    if unit == HOUR:
        return timedelta(minutes=15)
    if unit == DAY:
        return timedelta(hours=6)
    if unit == WEEK:
        return timedelta(hours=42)
    prev = window_start - timedelta(days=1)
    days = calendar.monthrange(prev.year, prev.month)[1]
    return timedelta(seconds=days * 86400 // 4)


def make_buckets(start: datetime, end: datetime, granularity: str, mode: str) -> list[TimeBucket]:
    """Partition [start, end) into buckets for one timeline mode.

    A range shorter than one unit yields a single clipped bucket. All
    windows are half-open; a record at an exact boundary belongs to the
    later discrete bucket.
    """
    if granularity not in GRANULARITIES:
        raise InvalidParameterError(f"unknown granularity {granularity!r}")
    if mode not in MODES:
        raise InvalidParameterError(f"unknown timeline mode {mode!r}")
    if start >= end:
        raise InvalidRangeError(f"empty time range: {start!r} >= {end!r}")

    windows = []
    cursor = floor_to_unit(start, granularity)
    while cursor < end:
        nxt = advance(cursor, granularity)
        windows.append((cursor, min(nxt, end)))
        cursor = nxt

    buckets = []
    for i, (w_start, w_end) in enumerate(windows):
        if mode == ACCUMULATIVE:
            b_start = windows[0][0]
        elif mode == OVERLAPPING and i >= 1:
            b_start = w_start - _quarter_of_previous(w_start, granularity)
        else:
            b_start = w_start
        buckets.append(TimeBucket(index=i, start=b_start, end=w_end, mode=mode))
    return buckets
