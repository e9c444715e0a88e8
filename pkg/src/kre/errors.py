"""Exception types shared across the package."""


class KreError(Exception):
    """Base class for all errors raised by this package."""


class IngestError(KreError):
    """Raised when a corpus file cannot be ingested (unreadable path,
    too many malformed lines, duplicate ids past tolerance)."""


class SnapshotError(KreError):
    """Raised when a snapshot file is missing, unreadable, or not a
    snapshot this version understands."""


class InvalidRangeError(KreError):
    """Raised for inverted or empty ranges (time windows, percentage bounds)."""


class InvalidFilterError(KreError):
    """Raised when a filter argument is structurally invalid (e.g. an
    empty keyword-kind set)."""


class InvalidParameterError(KreError):
    """Raised for out-of-domain scalar parameters (e.g. k = 0)."""


class QueryValidationError(KreError):
    """Raised when a query payload fails validation.

    ``fields`` lists every violated field with a human-readable reason,
    so callers can report all problems at once.
    """

    def __init__(self, fields):
        self.fields = list(fields)
        super().__init__("invalid query: " + "; ".join(self.fields))


class InternalError(KreError):
    """Raised for conditions that should be unreachable (e.g. exhausting
    id-collision retries)."""
