"""Figurative-language extraction: highlighted phrases, neologisms,
similes, and metaphors.

Simile rules over a tagged sentence (subscripts are min:max repetitions,
":" with no upper bound is unbounded):

    rule 1:  ADJ{0:1} NOUN{1} like{1} DET{0:1} (ADJ{0:1} NOUN{1}){1:}
    rule 2:  as{1} ADJ{1} as{1} DET{0:1} (ADJ{0:1} NOUN{1}){1:}

"like" and "as" are matched on their lowercase surface form, never by tag,
so tagging ambiguity on the pivots cannot suppress a match. Matching is
leftmost-longest with consumed tokens, so matches never overlap.

Copular ("is_a") metaphors pair the noun phrase before "is a"/"is an" with
the one after it and keep the pair only when the head nouns are
taxonomically unrelated: neither a hyponym of the other and no shared
hyponyms (optionally no shared hypernyms as a stricter gate).

"of" metaphors are collocational: every "NP of NP" occurrence corpus-wide
is counted into a table first, and a pair is kept when its association
score clears the configured threshold.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import ZeroCount
from .records import EntityMention, MetaphorMatch, SimileMatch
from .taxonomy import TaxonomyStore, is_hyponym, shared_hypernyms, shared_hyponyms
from .text import ADJ, DET, NOUN, Token, tokenize

#: Double-quote characters treated interchangeably when pairing.
QUOTE_CHARS = ('"', "“", "”")

PMI_VARIANTS = ("paper", "standard")


# ---------------------------------------------------------------------------
# Highlighted phrases
# ---------------------------------------------------------------------------


def extract_highlighted(
    quote: str, min_chars: int = 2, max_tokens: int = 15
) -> list[str]:
    """Contents of balanced double-quote pairs inside the quote text.

    Quote characters pair up in reading order (1st opens, 2nd closes, and
    so on); a trailing unbalanced mark yields nothing. A pair wrapping the
    entire text is the quotation's own punctuation, not a highlight, and is
    skipped, as are trivially short spans and spans longer than
    ``max_tokens`` words.
    """
    positions = [i for i, ch in enumerate(quote) if ch in QUOTE_CHARS]
    stripped = quote.strip()
    first_char = len(quote) - len(quote.lstrip())
    last_char = first_char + len(stripped) - 1
    found: list[str] = []
    for opener, closer in zip(positions[0::2], positions[1::2]):
        if opener == first_char and closer == last_char:
            continue
        span = quote[opener + 1 : closer].strip()
        if len(span) < min_chars or len(span.split()) > max_tokens:
            continue
        found.append(span)
    return found


# ---------------------------------------------------------------------------
# Neologisms
# ---------------------------------------------------------------------------


def count_corpus_words(quotes: Iterable[str]) -> Counter:
    """Frequency of every lowercased all-letter token across the corpus."""
    counts: Counter = Counter()
    for quote in quotes:
        for token in tokenize(quote):
            if token.tag is None and token.surface.isalpha():
                counts[token.surface.lower()] += 1
    return counts


def detect_neologisms(
    tokens: Sequence[Token],
    own_fields: Iterable[str],
    entities: Sequence[EntityMention],
    dictionary: frozenset[str] | set[str],
    corpus_freq: Counter,
    min_count: int,
) -> list[str]:
    """Invented words in one quote.

    ``tokens`` are quote-level tokens (offsets into the quote). A candidate
    is an all-letter token of length >= 4 that is missing from the merged
    US+UK dictionary, is not a token of the record's own speaker, job title
    or affiliation, does not fall inside a detected entity mention, and
    occurs at least ``min_count`` times corpus-wide (screening out typos
    and formatting debris). Lowercased, de-duplicated, sorted.
    """
    own_tokens = set()
    for value in own_fields:
        for tok in tokenize(value):
            own_tokens.add(tok.surface.lower())
    spans = [(e.start, e.start + len(e.surface)) for e in entities]

    found = set()
    for token in tokens:
        surface = token.surface
        if len(surface) < 4 or not surface.isalpha():
            continue
        word = surface.lower()
        if word in dictionary or word in own_tokens:
            continue
        if any(token.start < end and start < token.end for start, end in spans):
            continue
        if corpus_freq.get(word, 0) < min_count:
            continue
        found.add(word)
    return sorted(found)


# ---------------------------------------------------------------------------
# Similes
# ---------------------------------------------------------------------------


def _parse_np_units(tokens: Sequence[Token], start: int) -> int:
    """Consume (ADJ? NOUN)+ greedily from ``start``; returns the end index.

    Returns ``start`` itself when no unit parses (the caller treats that as
    a failed match).
    """
    i = start
    while i < len(tokens):
        if tokens[i].tag == NOUN:
            i += 1
        elif (
            tokens[i].tag == ADJ
            and i + 1 < len(tokens)
            and tokens[i + 1].tag == NOUN
        ):
            i += 2
        else:
            break
    return i


def _match_rule1(tokens: Sequence[Token], i: int) -> tuple[int, int, int] | None:
    """Try rule 1 with its LHS starting at token ``i``.

    Returns (lhs_start, pivot_index, end) or None.
    """
    if tokens[i].tag == ADJ and i + 1 < len(tokens) and tokens[i + 1].tag == NOUN:
        noun_at = i + 1
    elif tokens[i].tag == NOUN:
        noun_at = i
    else:
        return None
    pivot = noun_at + 1
    if pivot >= len(tokens) or tokens[pivot].surface.lower() != "like":
        return None
    rhs_start = pivot + 1
    if rhs_start < len(tokens) and tokens[rhs_start].tag == DET:
        rhs_start += 1
    end = _parse_np_units(tokens, rhs_start)
    if end == rhs_start:
        return None
    return i, pivot, end


def _match_rule2(tokens: Sequence[Token], i: int) -> tuple[int, int, int] | None:
    """Try rule 2 starting at token ``i`` ("as ADJ as ...")."""
    if tokens[i].surface.lower() != "as":
        return None
    if i + 2 >= len(tokens):
        return None
    if tokens[i + 1].tag != ADJ or tokens[i + 2].surface.lower() != "as":
        return None
    rhs_start = i + 3
    if rhs_start < len(tokens) and tokens[rhs_start].tag == DET:
        rhs_start += 1
    end = _parse_np_units(tokens, rhs_start)
    if end == rhs_start:
        return None
    return i, i + 1, end


def _span_text(sentence: str, tokens: Sequence[Token], first: int, last: int) -> str:
    return sentence[tokens[first].start : tokens[last].end]


def extract_similes(tokens: Sequence[Token], sentence: str) -> list[SimileMatch]:
    """Leftmost-longest, non-overlapping simile matches of both rules."""
    matches: list[SimileMatch] = []
    i = 0
    n = len(tokens)
    while i < n:
        candidates = []
        r1 = _match_rule1(tokens, i)
        if r1 is not None:
            candidates.append((1, r1))
        r2 = _match_rule2(tokens, i)
        if r2 is not None:
            candidates.append((2, r2))
        if not candidates:
            i += 1
            continue
        # Same start: the longer match wins; rule 1 on a dead tie.
        rule, (start, pivot, end) = max(candidates, key=lambda c: (c[1][2], -c[0]))
        if rule == 1:
            lhs = _span_text(sentence, tokens, start, pivot - 1)
            rhs_first = pivot + 1  # right after "like"
        else:
            lhs = tokens[pivot].surface
            rhs_first = pivot + 2  # right after the second "as"
        rhs = _span_text(sentence, tokens, rhs_first, end - 1)
        text = _span_text(sentence, tokens, start, end - 1)
        matches.append(SimileMatch(text=text, rule=rule, lhs=lhs, rhs=rhs))
        i = end
    return matches


# ---------------------------------------------------------------------------
# Noun phrases and metaphors
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class NounPhrase:
    """A DET? ADJ* NOUN+ token run; ``head`` is the final noun."""

    start: int  # first token index
    end: int  # one past the last token index
    head: str
    surface: str
    normalized: str


def _np_ending_at(tokens: Sequence[Token], last: int, sentence: str) -> NounPhrase | None:
    """Maximal DET? ADJ* NOUN+ run whose final token is ``last``."""
    if last < 0 or tokens[last].tag != NOUN:
        return None
    i = last
    while i - 1 >= 0 and tokens[i - 1].tag == NOUN:
        i -= 1
    while i - 1 >= 0 and tokens[i - 1].tag == ADJ:
        i -= 1
    if i - 1 >= 0 and tokens[i - 1].tag == DET:
        i -= 1
    return _make_np(tokens, i, last + 1, sentence)


def _np_starting_at(tokens: Sequence[Token], start: int, sentence: str) -> NounPhrase | None:
    """Maximal DET? ADJ* NOUN+ run beginning at ``start``."""
    i = start
    if i < len(tokens) and tokens[i].tag == DET:
        i += 1
    while i < len(tokens) and tokens[i].tag == ADJ:
        i += 1
    first_noun = i
    while i < len(tokens) and tokens[i].tag == NOUN:
        i += 1
    if i == first_noun:
        return None
    return _make_np(tokens, start, i, sentence)


def _make_np(tokens: Sequence[Token], start: int, end: int, sentence: str) -> NounPhrase:
    body = tokens[start:end]
    words = [t.surface for t in body]
    tags = [t.tag for t in body]
    keep = 1 if tags and tags[0] == DET else 0
    normalized = " ".join(w.lower() for w in words[keep:])
    head = next(t.surface.lower() for t in reversed(body) if t.tag == NOUN)
    return NounPhrase(
        start=start,
        end=end,
        head=head,
        surface=_span_text(sentence, tokens, start, end - 1),
        normalized=normalized,
    )


def extract_isa_metaphors(
    tokens: Sequence[Token],
    sentence: str,
    taxonomy: TaxonomyStore,
    check_shared_hypernyms: bool = False,
) -> list[MetaphorMatch]:
    """Copular metaphors: "NP is a NP" with taxonomically unrelated heads."""
    matches: list[MetaphorMatch] = []
    for i in range(1, len(tokens) - 2):
        if tokens[i].surface.lower() != "is":
            continue
        if tokens[i + 1].surface.lower() not in ("a", "an"):
            continue
        left = _np_ending_at(tokens, i - 1, sentence)
        right = _np_starting_at(tokens, i + 2, sentence)
        if left is None or right is None:
            continue
        h1, h2 = left.head, right.head
        if is_hyponym(h1, h2, taxonomy) or is_hyponym(h2, h1, taxonomy):
            continue
        if shared_hyponyms(h1, h2, taxonomy):
            continue
        if check_shared_hypernyms and shared_hypernyms(h1, h2, taxonomy):
            continue
        matches.append(
            MetaphorMatch(
                text=_span_text(sentence, tokens, left.start, right.end - 1),
                kind="is_a",
                lhs_np=left.surface,
                rhs_np=right.surface,
            )
        )
    return matches


def iter_np_of_np(
    tokens: Sequence[Token], sentence: str
) -> Iterator[tuple[NounPhrase, NounPhrase]]:
    """Yield every "NP of NP" occurrence in a tagged sentence."""
    for i in range(1, len(tokens) - 1):
        if tokens[i].surface.lower() != "of":
            continue
        left = _np_ending_at(tokens, i - 1, sentence)
        right = _np_starting_at(tokens, i + 1, sentence)
        if left is None or right is None:
            continue
        yield left, right


# ---------------------------------------------------------------------------
# PMI
# ---------------------------------------------------------------------------


@dataclass
class PmiTable:
    """Corpus-wide counts of harvested (lhs, rhs) noun-phrase pairs."""

    pair_counts: Counter = field(default_factory=Counter)
    lhs_counts: Counter = field(default_factory=Counter)
    rhs_counts: Counter = field(default_factory=Counter)
    total_pairs: int = 0

    def add(self, lhs: str, rhs: str, count: int = 1) -> None:
        self.pair_counts[(lhs, rhs)] += count
        self.lhs_counts[lhs] += count
        self.rhs_counts[rhs] += count
        self.total_pairs += count

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, str]]) -> "PmiTable":
        table = cls()
        for lhs, rhs in pairs:
            table.add(lhs, rhs)
        return table


def harvest_np_of_np(
    tagged_sentences: Iterable[tuple[Sequence[Token], str]]
) -> PmiTable:
    """Count every "NP of NP" occurrence across the corpus.

    Keys are normalized noun phrases: lowercased with leading determiners
    stripped.
    """
    table = PmiTable()
    for tokens, sentence in tagged_sentences:
        for left, right in iter_np_of_np(tokens, sentence):
            table.add(left.normalized, right.normalized)
    return table


def pmi_score(x: str, y: str, table: PmiTable, variant: str = "paper") -> float:
    """Association score for the pair with RHS ``x`` and LHS ``y``.

    The "paper" variant is log(p(y|x) / p(x)) with p(y|x) the pair count
    over the RHS marginal and p(x) the RHS marginal over all pairs. The
    "standard" variant is the textbook log(p(x,y) / (p(x) p(y))). Natural
    logarithm in both. Raises ZeroCount instead of returning -inf when the
    pair or a marginal has never been seen.
    """
    if variant not in PMI_VARIANTS:
        raise ValueError(f"unknown pmi variant {variant!r}")
    pair = table.pair_counts.get((y, x), 0)
    rhs = table.rhs_counts.get(x, 0)
    lhs = table.lhs_counts.get(y, 0)
    total = table.total_pairs
    if pair == 0 or rhs == 0 or total == 0 or (variant == "standard" and lhs == 0):
        raise ZeroCount(f"no counts for pair ({y!r}, {x!r})")
    if variant == "paper":
        p_y_given_x = pair / rhs
        p_x = rhs / total
        return math.log(p_y_given_x / p_x)
    p_xy = pair / total
    p_x = rhs / total
    p_y = lhs / total
    return math.log(p_xy / (p_x * p_y))


def extract_of_metaphors(
    tokens: Sequence[Token],
    sentence: str,
    table: PmiTable,
    threshold: float,
    variant: str = "paper",
) -> list[MetaphorMatch]:
    """NP-of-NP occurrences whose association score clears the threshold."""
    matches: list[MetaphorMatch] = []
    for left, right in iter_np_of_np(tokens, sentence):
        try:
            score = pmi_score(right.normalized, left.normalized, table, variant)
        except ZeroCount:
            continue
        if score >= threshold:
            matches.append(
                MetaphorMatch(
                    text=_span_text(sentence, tokens, left.start, right.end - 1),
                    kind="of",
                    lhs_np=left.surface,
                    rhs_np=right.surface,
                    pmi=score,
                )
            )
    return matches
