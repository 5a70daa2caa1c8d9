"""TSV parsing and HTML cleanup for raw quote rows.

The input format is deliberately dumb: UTF-8, one record per line, literal
tab separators, no quoting convention (a tab can never occur inside a
field). Rows carry either five fields (id, speaker, job title, affiliation,
quote) or the four-field legacy layout without a job title.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .langid import UNDETERMINED, LanguageProfile, detect_language
from .records import QuoteRecord, RawQuoteRecord, quote_fingerprint


@dataclass(frozen=True, slots=True)
class MalformedRow:
    """A skipped input line: wrong field count. Reported, never fatal."""

    line_number: int
    field_count: int
    line: str


class ParseResult(NamedTuple):
    records: list[RawQuoteRecord]
    malformed: list[MalformedRow]


def parse_tsv(lines: Iterable[str]) -> ParseResult:
    """Parse tab-separated rows into raw records, preserving input order.

    Blank lines are skipped silently. Lines with fewer than 4 or more than
    5 fields are collected as ``MalformedRow`` and produce no record.
    Four-field lines are read as (id, speaker, affiliation, quote) with an
    empty job title.
    """
    records: list[RawQuoteRecord] = []
    malformed: list[MalformedRow] = []
    for line_number, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) == 5:
            rid, speaker, job_title, affiliation, quote = fields
        elif len(fields) == 4:
            rid, speaker, affiliation, quote = fields
            job_title = ""
        else:
            malformed.append(MalformedRow(line_number, len(fields), line))
            continue
        records.append(RawQuoteRecord(rid, speaker, job_title, affiliation, quote))
    return ParseResult(records, malformed)


# The six named entities decoded, beyond numeric character references.
_NAMED_ENTITIES = {
    "amp": "&",
    "lt": "<",
    "gt": ">",
    "quot": '"',
    "apos": "'",
    "nbsp": "\xa0",
}

_ENTITY_RE = re.compile(r"&(#[0-9]+|#[xX][0-9a-fA-F]+|[a-zA-Z]+);")


def _decode_entity(match: re.Match) -> str:
    body = match.group(1)
    if body.startswith("#"):
        try:
            code = int(body[2:], 16) if body[1] in "xX" else int(body[1:])
            return chr(code)
        except (ValueError, OverflowError):
            return match.group(0)
    return _NAMED_ENTITIES.get(body.lower(), match.group(0))


def unescape_html(text: str) -> str:
    """Decode HTML escape entities in a single pass.

    Handles the named entities amp, lt, gt, quot, apos, nbsp plus decimal
    and hex numeric character references. Unknown entity names (and
    malformed numeric references) are left verbatim. Exactly one pass:
    "&amp;lt;" decodes to "&lt;", never to "<".
    """
    return _ENTITY_RE.sub(_decode_entity, text)


# A tag span starts with "<" plus a letter, "/", "!" or "?"; a bare "<"
# followed by anything else (space, digit, end) is literal text.
_COMMENT_RE = re.compile(r"<!--.*?-->", re.DOTALL)
_TAG_RE = re.compile(r"</?[A-Za-z][^<>]*>|<[!?][^<>]*>")


def strip_html(text: str) -> str:
    """Remove well-formed tag spans and normalize whitespace.

    Runs the removal to a fixed point so splicing the surrounding text can
    never leave a new well-formed tag behind. An unbalanced "<" with no
    closing ">" stays as literal text. Consecutive whitespace collapses to
    one space; the result is trimmed.
    """
    previous = None
    while previous != text:
        previous = text
        text = _COMMENT_RE.sub(" ", text)
        text = _TAG_RE.sub(" ", text)
    return " ".join(text.split())


def clean_quote(text: str) -> str:
    """Full cleanup for a quote field: unescape entities, then strip markup."""
    return strip_html(unescape_html(text))


def collapse_whitespace(text: str) -> str:
    """Trim and collapse runs of whitespace to single spaces."""
    return " ".join(text.split())


def filter_non_english(
    records: Sequence[QuoteRecord],
    profiles: list[LanguageProfile],
    allowlist: frozenset[str] | set[str],
) -> tuple[list[QuoteRecord], int]:
    """Keep records whose detected language is allowed, preserving order.

    Undetermined ("und") records are kept: quotes too short to classify
    are plentiful and overwhelmingly in-language, so dropping them would
    silently bias the corpus.
    """
    kept: list[QuoteRecord] = []
    dropped = 0
    for r in records:
        code = detect_language(r.quote, profiles)
        if code == UNDETERMINED or code in allowlist:
            kept.append(r)
        else:
            dropped += 1
    return kept, dropped


def dedupe(records: Sequence[QuoteRecord]) -> tuple[list[QuoteRecord], int]:
    """Drop later records with a (speaker, quote) fingerprint seen before.

    Exact-match dedup only: the first occurrence survives, order is
    preserved, and re-running over the result removes nothing.
    """
    seen: set[str] = set()
    kept: list[QuoteRecord] = []
    removed = 0
    for r in records:
        fp = quote_fingerprint(r.speaker, r.quote)
        if fp in seen:
            removed += 1
        else:
            seen.add(fp)
            kept.append(r)
    return kept, removed
