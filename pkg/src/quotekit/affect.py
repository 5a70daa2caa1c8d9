"""Emotion scoring from a weighted lexicon and gazetteer entity tagging.

Both are deliberately deterministic stand-ins for heavier statistical
tooling: any lexicon or gazetteer file that follows the documented formats
plugs in without code changes.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

from .errors import ConfigError
from .records import EMOTION_ORDER, ENTITY_CLASSES, EmotionScores, EntityMention
from .text import tokenize


class EmotionLexicon:
    """Lowercased 1-2 word terms mapped to weighted emotions.

    A term may contribute to several emotions; each (term, emotion) pair
    appears once and weights stay within [0, 1], which is what keeps the
    final scores bounded.
    """

    def __init__(self, entries: dict[str, list[tuple[str, float]]] | None = None):
        self.entries: dict[str, list[tuple[str, float]]] = {}
        self.has_bigrams = False
        for term, weights in (entries or {}).items():
            for emotion, weight in weights:
                self.add(term, emotion, weight)

    def add(self, term: str, emotion: str, weight: float) -> None:
        term = " ".join(term.lower().split())
        if not term or len(term.split()) > 2:
            raise ConfigError(f"emotion term must be 1-2 words: {term!r}")
        if emotion not in EMOTION_ORDER:
            raise ConfigError(f"unknown emotion {emotion!r} for term {term!r}")
        if not 0.0 <= weight <= 1.0:
            raise ConfigError(f"weight out of [0,1] for term {term!r}: {weight}")
        existing = self.entries.setdefault(term, [])
        if any(e == emotion for e, _ in existing):
            raise ConfigError(f"duplicate emotion {emotion!r} for term {term!r}")
        existing.append((emotion, weight))
        if " " in term:
            self.has_bigrams = True

    @classmethod
    def load(cls, path: Path | str) -> "EmotionLexicon":
        """Load term TAB emotion TAB weight lines; '#' comments allowed."""
        lexicon = cls()
        with open(path, encoding="utf-8") as fh:
            for line_number, raw in enumerate(fh, start=1):
                line = raw.rstrip("\r\n")
                if not line.strip() or line.lstrip().startswith("#"):
                    continue
                parts = line.split("\t")
                if len(parts) != 3:
                    raise ConfigError(f"{path}:{line_number}: expected 3 columns")
                try:
                    weight = float(parts[2])
                except ValueError as exc:
                    raise ConfigError(f"{path}:{line_number}: bad weight {parts[2]!r}") from exc
                try:
                    lexicon.add(parts[0], parts[1].strip(), weight)
                except ConfigError as exc:
                    raise ConfigError(f"{path}:{line_number}: {exc}") from exc
        return lexicon


def score_emotions(tokens: Sequence[str], lexicon: EmotionLexicon) -> EmotionScores:
    """Score a quote's lowercased tokens against the lexicon.

    Bigrams are tried before unigrams and consume both tokens, so a two
    word term never double-counts through its parts. Each emotion's score
    is its summed weights divided by the total number of matched term
    occurrences; no matches means all zeros and the label "none".
    """
    sums = {name: 0.0 for name in EMOTION_ORDER}
    occurrences = 0
    i = 0
    n = len(tokens)
    while i < n:
        entry = None
        if i + 1 < n:
            entry = lexicon.entries.get(f"{tokens[i]} {tokens[i + 1]}")
        if entry is not None:
            step = 2
        else:
            entry = lexicon.entries.get(tokens[i])
            step = 1
        if entry is not None:
            occurrences += 1
            for emotion, weight in entry:
                sums[emotion] += weight
        i += step
    if occurrences == 0:
        return EmotionScores()
    return EmotionScores.from_values(
        anger=sums["anger"] / occurrences,
        fear=sums["fear"] / occurrences,
        joy=sums["joy"] / occurrences,
        sadness=sums["sadness"] / occurrences,
    )


class Gazetteer:
    """Surface phrases mapped to entity classes, matched longest-first.

    Phrases are unique after case folding; the entity classes come from
    the fixed set ``records.ENTITY_CLASSES``.
    """

    def __init__(self):
        self.phrases: dict[str, str] = {}  # lowercased phrase -> class
        self.max_phrase_tokens = 0

    def __len__(self) -> int:
        return len(self.phrases)

    def add(self, phrase: str, label: str) -> None:
        """Register a phrase; a case-folded duplicate is a config error."""
        key = " ".join(phrase.lower().split())
        if not key:
            raise ConfigError("empty gazetteer phrase")
        if label not in ENTITY_CLASSES:
            raise ConfigError(f"unknown entity class {label!r} for phrase {phrase!r}")
        if key in self.phrases:
            raise ConfigError(f"duplicate gazetteer phrase {phrase!r}")
        self.phrases[key] = label
        self.max_phrase_tokens = max(self.max_phrase_tokens, len(tokenize(key)))

    @classmethod
    def load(cls, path: Path | str) -> "Gazetteer":
        """Load phrase TAB class lines; duplicates are a config error."""
        gazetteer = cls()
        with open(path, encoding="utf-8") as fh:
            for line_number, raw in enumerate(fh, start=1):
                line = raw.rstrip("\r\n")
                if not line.strip() or line.lstrip().startswith("#"):
                    continue
                parts = line.split("\t")
                if len(parts) != 2:
                    raise ConfigError(f"{path}:{line_number}: expected 2 columns")
                try:
                    gazetteer.add(parts[0], parts[1].strip())
                except ConfigError as exc:
                    raise ConfigError(f"{path}:{line_number}: {exc}") from exc
        return gazetteer

    def seed(self, phrase: str, label: str) -> None:
        """Add a corpus-derived phrase, keeping any existing entry."""
        key = " ".join(phrase.lower().split())
        if key and key not in self.phrases and label in ENTITY_CLASSES:
            self.phrases[key] = label
            self.max_phrase_tokens = max(self.max_phrase_tokens, len(tokenize(key)))


def extract_entities(quote: str, gazetteer: Gazetteer) -> list[EntityMention]:
    """Case-insensitive longest-match scan over token boundaries.

    Matched tokens are consumed, so mentions never overlap and shorter
    phrases inside a longer match are suppressed. Mentions come back in
    start-offset order with the surface exactly as it appears in the quote.
    """
    tokens = tokenize(quote)
    mentions: list[EntityMention] = []
    i = 0
    n = len(tokens)
    longest = gazetteer.max_phrase_tokens
    while i < n:
        hit = None
        for span in range(min(longest, n - i), 0, -1):
            start = tokens[i].start
            end = tokens[i + span - 1].end
            candidate = quote[start:end].lower()
            label = gazetteer.phrases.get(candidate)
            if label is not None:
                hit = (span, start, end, label)
                break
        if hit is None:
            i += 1
            continue
        span, start, end, label = hit
        mentions.append(EntityMention(surface=quote[start:end], label=label, start=start))
        i += span
    return mentions
