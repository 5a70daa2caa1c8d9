"""Exception types shared across the package.

Recoverable per-row conditions (malformed TSV rows, bad JSONL lines) are
reported as data, not raised; see ``ingest.MalformedRow`` and
``jsonl.SchemaError``. The exceptions below are for genuinely fatal or
caller-error situations.
"""


class QuotekitError(Exception):
    """Base class for all package errors."""


class ConfigError(QuotekitError):
    """A rule table, lexicon, taxonomy or config file is unusable."""


class IoFailure(QuotekitError):
    """An output write failed partway through.

    ``path`` is the file that now holds partial output; ``written`` is the
    number of complete records flushed before the failure.
    """

    def __init__(self, path, written, cause):
        super().__init__(f"write to {path} failed after {written} records: {cause}")
        self.path = path
        self.written = written
        self.cause = cause


class UnknownKey(QuotekitError):
    """A query named a key that is not part of the corpus schema."""


class EmptyTable(QuotekitError):
    """A word cloud was requested for an empty frequency table."""


class ZeroCount(QuotekitError):
    """A PMI score was requested for a pair with a zero count."""
