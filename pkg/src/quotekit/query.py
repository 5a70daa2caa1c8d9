"""Key/term queries over an enriched corpus and word-frequency tables."""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .errors import UnknownKey
from .jsonl import JSONL_KEYS
from .records import EnrichedQuote


@dataclass(frozen=True)
class QuerySpec:
    """A corpus query: one key, one or more search terms, optional image.

    Terms come from a comma-delimited CLI argument; a record matches when
    ANY term occurs case-insensitively as a whole word in the rendering of
    the record's value under ``key``.
    """

    key: str
    terms: tuple[str, ...]
    output_path: Path | None = None

    def __post_init__(self):
        if self.key not in JSONL_KEYS:
            raise UnknownKey(f"unknown key {self.key!r}; expected one of {', '.join(JSONL_KEYS)}")
        if not self.terms or not any(t.strip() for t in self.terms):
            raise ValueError("terms must be non-empty")

    @classmethod
    def from_cli(cls, key: str, terms_arg: str, output_path: str | None = None) -> "QuerySpec":
        terms = tuple(t.strip() for t in terms_arg.split(",") if t.strip())
        return cls(key=key, terms=terms, output_path=Path(output_path) if output_path else None)


def render_values(record: EnrichedQuote, key: str) -> list[str]:
    """String renderings of a record's value under a schema key.

    List-valued keys render one string per element. Emotion renders as its
    label; an entity renders as "surface CLASS" so both sides are
    searchable.
    """
    if key == "ID":
        return [record.id]
    if key == "SpeakerName":
        return [record.speaker]
    if key == "JobRole":
        return [record.job_title]
    if key == "Affiliation":
        return [record.affiliation]
    if key == "Sentences":
        return list(record.sentences)
    if key == "Neologism":
        return list(record.neologisms)
    if key == "Quotedphrases":
        return list(record.quoted_phrases)
    if key == "Simile":
        return list(record.similes)
    if key == "Metaphor":
        return list(record.metaphors)
    if key == "Emotion":
        return [record.emotion.label]
    if key == "Entities":
        return [f"{e.surface} {e.label}" for e in record.entities]
    raise UnknownKey(f"unknown key {key!r}")


def _term_pattern(term: str) -> re.Pattern:
    return re.compile(rf"(?<!\w){re.escape(term)}(?!\w)", re.IGNORECASE)


def query_corpus(records: Sequence[EnrichedQuote], spec: QuerySpec) -> list[EnrichedQuote]:
    """Records whose value at ``spec.key`` contains any term as a whole word."""
    patterns = [_term_pattern(t) for t in spec.terms]
    matched = []
    for record in records:
        values = render_values(record, spec.key)
        if any(p.search(v) for v in values for p in patterns):
            matched.append(record)
    return matched


def load_stopwords(path: Path | str) -> frozenset[str]:
    words = set()
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            word = raw.strip().lower()
            if word and not word.startswith("#"):
                words.add(word)
    return frozenset(words)


_WORD_RE = re.compile(r"[^\W\d_]+", re.UNICODE)


def term_frequencies(
    records: Sequence[EnrichedQuote],
    key: str,
    stopwords: frozenset[str] = frozenset(),
) -> dict[str, int]:
    """Word counts over the renderings of ``key`` across the records.

    Tokens are lowercased; stopwords and tokens shorter than 3 characters
    are dropped.
    """
    if key not in JSONL_KEYS:
        raise UnknownKey(f"unknown key {key!r}")
    counts: dict[str, int] = {}
    for record in records:
        for value in render_values(record, key):
            for word in _WORD_RE.findall(value.lower()):
                if len(word) < 3 or word in stopwords:
                    continue
                counts[word] = counts.get(word, 0) + 1
    return counts
