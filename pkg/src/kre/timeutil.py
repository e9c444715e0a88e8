"""UTC timestamp parsing and formatting.

All instants in the engine are timezone-aware UTC datetimes truncated to
second precision. The wire format is ISO-8601 with a trailing "Z".
"""

from __future__ import annotations

from datetime import datetime, timezone

UTC = timezone.utc


def parse_utc(value: str) -> datetime:
    """Parse an ISO-8601 timestamp, normalize to UTC, truncate to seconds.

    A timestamp without an offset is taken as UTC. Raises ValueError on
    anything unparseable.
    """
    if not isinstance(value, str):
        raise ValueError(f"timestamp must be a string, got {type(value).__name__}")
    text = value.strip()
    if text.endswith(("Z", "z")):
        text = text[:-1] + "+00:00"
    dt = datetime.fromisoformat(text)
    if dt.tzinfo is None:
        dt = dt.replace(tzinfo=UTC)
    return dt.astimezone(UTC).replace(microsecond=0)


def format_utc(dt: datetime) -> str:
    """Render a UTC instant as e.g. ``2016-07-01T00:00:00Z``."""
    if dt.tzinfo is None:
        dt = dt.replace(tzinfo=UTC)
    return dt.astimezone(UTC).strftime("%Y-%m-%dT%H:%M:%SZ")
