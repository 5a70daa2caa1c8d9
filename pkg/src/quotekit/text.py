"""Sentence splitting, tokenization, and lexicon + suffix POS tagging.

The tagger is deliberately small: a word list for closed classes and
common exceptions, ordered suffix rules for the open classes, and NOUN as
the default for anything unknown. That is enough for the extraction
patterns downstream, which only care about NOUN/ADJ/DET runs and match the
pivot words ("like", "as", "is", "of") by surface form anyway.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Sequence

from .errors import ConfigError

NOUN = "NOUN"
ADJ = "ADJ"
DET = "DET"
VERB = "VERB"
PRON = "PRON"
OTHER = "OTHER"

TAGS = frozenset({NOUN, ADJ, DET, VERB, PRON, OTHER})

#: Sentence terminators; a split happens after one only when whitespace
#: (or end of text) follows.
_TERMINATORS = ".!?;"


@dataclass(frozen=True, slots=True)
class Token:
    """A surface span at a character offset, with a POS tag once tagged."""

    surface: str
    start: int
    tag: str | None = None

    @property
    def end(self) -> int:
        return self.start + len(self.surface)


def load_abbreviations(path: Path | str) -> frozenset[str]:
    """One abbreviation per line (with its trailing period), '#' comments."""
    abbreviations = set()
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            abbreviations.add(line.lower())
    return frozenset(abbreviations)


def _is_abbreviation(text: str, dot: int, abbreviations: frozenset[str]) -> bool:
    # Token running from the previous whitespace up to and including the dot.
    j = dot
    while j > 0 and not text[j - 1].isspace():
        j -= 1
    token = text[j : dot + 1]
    if token.lower() in abbreviations:
        return True
    # Single-initial tokens like "J." never end a sentence.
    return len(token) == 2 and token[0].isalpha()


def split_sentences(quote: str, abbreviations: frozenset[str] = frozenset()) -> list[str]:
    """Split cleaned text into sentences, keeping terminators on the left.

    A "." only splits when the token it closes is not a known abbreviation;
    "!", "?" and ";" always split when followed by whitespace or the end of
    the text. Empty pieces are dropped.
    """
    sentences: list[str] = []
    start = 0
    for i, ch in enumerate(quote):
        if ch not in _TERMINATORS:
            continue
        at_boundary = i + 1 == len(quote) or quote[i + 1].isspace()
        if not at_boundary:
            continue
        if ch == "." and _is_abbreviation(quote, i, abbreviations):
            continue
        piece = quote[start : i + 1].strip()
        if piece:
            sentences.append(piece)
        start = i + 1
    tail = quote[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences


# Word tokens are maximal runs of letters, digits and apostrophes; any
# other non-space character stands alone as an OTHER token.
_TOKEN_RE = re.compile(r"(?:[^\W_]|['’])+|\S", re.UNICODE)
_WORD_CHAR_RE = re.compile(r"[^\W_]", re.UNICODE)


def tokenize(sentence: str) -> list[Token]:
    """Split a sentence into offset-bearing tokens.

    Punctuation tokens come back already tagged OTHER; word tokens are
    untagged until ``pos_tag`` runs.
    """
    tokens: list[Token] = []
    for m in _TOKEN_RE.finditer(sentence):
        surface = m.group(0)
        is_word = bool(_WORD_CHAR_RE.search(surface)) or surface in ("'", "’")
        tokens.append(Token(surface, m.start(), None if is_word else OTHER))
    return tokens


@dataclass(frozen=True, slots=True)
class PosLexicon:
    """Word list plus ordered suffix fallback rules."""

    words: dict[str, str]
    suffix_rules: tuple[tuple[str, str], ...]

    @classmethod
    def load(cls, lexicon_path: Path | str, suffix_path: Path | str) -> "PosLexicon":
        words: dict[str, str] = {}
        with open(lexicon_path, encoding="utf-8") as fh:
            for line_number, raw in enumerate(fh, start=1):
                line = raw.rstrip("\r\n")
                if not line.strip() or line.lstrip().startswith("#"):
                    continue
                parts = line.split("\t")
                if len(parts) != 2 or parts[1] not in TAGS:
                    raise ConfigError(f"{lexicon_path}:{line_number}: bad entry {line!r}")
                words[parts[0].strip().lower()] = parts[1]
        rules: list[tuple[str, str]] = []
        with open(suffix_path, encoding="utf-8") as fh:
            for line_number, raw in enumerate(fh, start=1):
                line = raw.rstrip("\r\n")
                if not line.strip() or line.lstrip().startswith("#"):
                    continue
                parts = line.split("\t")
                if len(parts) != 2 or parts[1] not in TAGS:
                    raise ConfigError(f"{suffix_path}:{line_number}: bad entry {line!r}")
                rules.append((parts[0].strip().lower(), parts[1]))
        return cls(words, tuple(rules))

    def tag_word(self, surface: str) -> str:
        word = surface.lower()
        tag = self.words.get(word)
        if tag is not None:
            return tag
        for suffix, suffix_tag in self.suffix_rules:
            # Require at least two extra characters so short words do not
            # get mis-tagged by their accidental endings.
            if len(word) >= len(suffix) + 2 and word.endswith(suffix):
                return suffix_tag
        return NOUN


def pos_tag(tokens: Sequence[Token], lexicon: PosLexicon) -> list[Token]:
    """Assign one tag per token; punctuation keeps its OTHER tag."""
    return [
        t if t.tag is not None else replace(t, tag=lexicon.tag_word(t.surface))
        for t in tokens
    ]
