"""Core record types shared by every pipeline stage.

All types are immutable values: stages never mutate a record, they build a
new one (``dataclasses.replace``). That keeps every stage pure and safe to
run over records in parallel.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

#: Tie order used when two emotions share the top score.
EMOTION_ORDER = ("anger", "fear", "joy", "sadness")

#: Entity classes accepted in a gazetteer file.
ENTITY_CLASSES = frozenset(
    {"PERSON", "ORG", "GPE", "LOC", "PRODUCT", "EVENT", "NORP", "FAC", "MONEY"}
)


@dataclass(frozen=True, slots=True)
class RawQuoteRecord:
    """One TSV row exactly as read: nothing cleaned yet."""

    id: str
    speaker: str
    job_title: str
    affiliation: str
    quote: str


@dataclass(frozen=True, slots=True)
class QuoteRecord:
    """A cleaned record ready for (or moving through) normalization.

    ``imputed_job_title`` / ``imputed_affiliation`` flag values that were
    filled in by majority matching rather than present in the source row.
    """

    id: str
    speaker: str
    job_title: str
    affiliation: str
    quote: str
    imputed_job_title: bool = False
    imputed_affiliation: bool = False


@dataclass(frozen=True, slots=True)
class SimileMatch:
    """A simile span found by one of the two extraction rules."""

    text: str
    rule: int  # 1 or 2
    lhs: str
    rhs: str


@dataclass(frozen=True, slots=True)
class MetaphorMatch:
    """A copular ("is_a") or collocational ("of") metaphor span.

    ``pmi`` is set only for kind "of".
    """

    text: str
    kind: str  # "is_a" | "of"
    lhs_np: str
    rhs_np: str
    pmi: float | None = None


@dataclass(frozen=True, slots=True)
class EmotionScores:
    """Four emotion scores in [0, 1] plus the winning label.

    ``label`` is the argmax emotion under the fixed tie order
    ``EMOTION_ORDER``, or "none" when all four scores are zero.
    """

    anger: float = 0.0
    fear: float = 0.0
    joy: float = 0.0
    sadness: float = 0.0
    label: str = "none"

    @classmethod
    def from_values(cls, anger: float, fear: float, joy: float, sadness: float) -> "EmotionScores":
        scores = {"anger": anger, "fear": fear, "joy": joy, "sadness": sadness}
        if all(v == 0.0 for v in scores.values()):
            label = "none"
        else:
            best = max(scores.values())
            label = next(name for name in EMOTION_ORDER if scores[name] == best)
        return cls(anger=anger, fear=fear, joy=joy, sadness=sadness, label=label)


@dataclass(frozen=True, slots=True)
class EntityMention:
    """A gazetteer hit: ``surface`` occurs at character offset ``start``."""

    surface: str
    label: str
    start: int


@dataclass(frozen=True, slots=True)
class EnrichedQuote:
    """The final per-quote unit written to the corpus file.

    ``similes`` and ``metaphors`` hold the matched spans as plain strings;
    the structured match objects (rule number, noun phrases, PMI score) are
    an in-memory extraction detail that the corpus schema does not carry.
    """

    id: str
    speaker: str
    job_title: str
    affiliation: str
    sentences: tuple[str, ...] = ()
    neologisms: tuple[str, ...] = ()
    quoted_phrases: tuple[str, ...] = ()
    similes: tuple[str, ...] = ()
    metaphors: tuple[str, ...] = ()
    emotion: EmotionScores = field(default_factory=EmotionScores)
    entities: tuple[EntityMention, ...] = ()


def quote_fingerprint(speaker: str, quote: str) -> str:
    """Deterministic identity key for duplicate detection.

    Hashes the byte sequence ``speaker + "\\x1f" + quote`` (unit separator
    cannot occur in either field, so distinct pairs cannot collide by
    concatenation). Equal (speaker, quote) pairs always map to the same
    64-hex-digit string, on any platform.
    """
    payload = speaker.encode("utf-8") + b"\x1f" + quote.encode("utf-8")
    return hashlib.sha256(payload).hexdigest()


def validate_record(r: RawQuoteRecord) -> list[str]:
    """Return violation codes for a raw row; empty list means usable.

    Violations are data, not failures: callers decide whether to drop.
    """
    violations = []
    if not r.id.strip():
        violations.append("id_empty")
    if not r.speaker.strip():
        violations.append("speaker_empty")
    if not r.quote.strip():
        violations.append("quote_empty")
    return violations
