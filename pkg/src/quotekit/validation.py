"""Input validation helpers for the estimator-style pipeline stages."""

from __future__ import annotations

from typing import Sequence, Type

from .records import EnrichedQuote, QuoteRecord, RawQuoteRecord

_RECORD_TYPES = (RawQuoteRecord, QuoteRecord, EnrichedQuote)


def check_records(X, expected: Type = QuoteRecord) -> list:
    """Materialize ``X`` as a list and check element types.

    Raises TypeError with a pointed message when an element is not an
    ``expected`` record, naming the first offender. Accepts any iterable.
    """
    if isinstance(X, (str, bytes)):
        raise TypeError(
            f"expected a sequence of {expected.__name__} records, got a string; "
            "did you forget to parse the input?"
        )
    records = list(X)
    for i, r in enumerate(records):
        if not isinstance(r, expected):
            got = type(r).__name__
            hint = ""
            if isinstance(r, _RECORD_TYPES):
                hint = " (is this stage in the right pipeline position?)"
            raise TypeError(
                f"element {i}: expected {expected.__name__}, got {got}{hint}"
            )
    return records
