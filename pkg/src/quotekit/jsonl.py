"""Canonical JSONL serialization of enriched quotes.

One JSON object per line, UTF-8, LF terminators, keys always present and
always in the same order. The serialization is canonical: writing what was
read produces byte-identical output, which makes corpus files diffable and
lets tests compare bytes instead of structures.
"""

from __future__ import annotations

import io
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, NamedTuple

from .errors import IoFailure
from .records import EmotionScores, EnrichedQuote, EntityMention

logger = logging.getLogger(__name__)

#: Output keys in emission order.
JSONL_KEYS = (
    "ID",
    "SpeakerName",
    "JobRole",
    "Affiliation",
    "Sentences",
    "Neologism",
    "Quotedphrases",
    "Simile",
    "Metaphor",
    "Emotion",
    "Entities",
)

_EMOTION_KEYS = ("anger", "fear", "joy", "sadness")


@dataclass(frozen=True, slots=True)
class SchemaError:
    """One unusable input line: skipped, counted, reported."""

    line_number: int
    reason: str


class ReadResult(NamedTuple):
    records: list[EnrichedQuote]
    errors: list[SchemaError]


def record_to_object(record: EnrichedQuote) -> dict:
    """The JSON object for one record, keys in canonical order."""
    return {
        "ID": record.id,
        "SpeakerName": record.speaker,
        "JobRole": record.job_title,
        "Affiliation": record.affiliation,
        "Sentences": list(record.sentences),
        "Neologism": list(record.neologisms),
        "Quotedphrases": list(record.quoted_phrases),
        "Simile": list(record.similes),
        "Metaphor": list(record.metaphors),
        "Emotion": {
            "anger": record.emotion.anger,
            "fear": record.emotion.fear,
            "joy": record.emotion.joy,
            "sadness": record.emotion.sadness,
            "label": record.emotion.label,
        },
        "Entities": [
            {"Surface": e.surface, "Class": e.label, "Start": e.start}
            for e in record.entities
        ],
    }


def record_to_line(record: EnrichedQuote) -> str:
    # json.dumps float formatting is repr(), the shortest round-trip form.
    return json.dumps(record_to_object(record), ensure_ascii=False)


def write_jsonl(records: Iterable[EnrichedQuote], sink: IO[str] | Path | str) -> int:
    """Write records as JSONL; returns the number written.

    An I/O error aborts with ``IoFailure`` carrying the path and how many
    complete lines made it out before the failure.
    """
    if isinstance(sink, (str, Path)):
        path = Path(sink)
        try:
            with open(path, "w", encoding="utf-8", newline="\n") as fh:
                return write_jsonl(records, fh)
        except IoFailure:
            raise
        except OSError as exc:
            raise IoFailure(path, 0, exc) from exc

    written = 0
    name = getattr(sink, "name", "<stream>")
    try:
        for record in records:
            sink.write(record_to_line(record) + "\n")
            written += 1
    except OSError as exc:
        raise IoFailure(name, written, exc) from exc
    return written


def _require(obj: dict, key: str, types) -> object:
    if key not in obj:
        raise ValueError(f"missing key {key!r}")
    value = obj[key]
    if not isinstance(value, types):
        raise ValueError(f"key {key!r} has wrong type {type(value).__name__}")
    return value


def _string_list(obj: dict, key: str) -> tuple[str, ...]:
    value = _require(obj, key, list)
    if not all(isinstance(v, str) for v in value):
        raise ValueError(f"key {key!r} must hold strings")
    return tuple(value)


def object_to_record(obj: dict) -> EnrichedQuote:
    """Rebuild one record from a parsed JSON object (raises ValueError)."""
    emotion_obj = _require(obj, "Emotion", dict)
    for k in _EMOTION_KEYS:
        if not isinstance(emotion_obj.get(k), (int, float)) or isinstance(
            emotion_obj.get(k), bool
        ):
            raise ValueError(f"Emotion.{k} must be a number")
    emotion = EmotionScores(
        anger=float(emotion_obj["anger"]),
        fear=float(emotion_obj["fear"]),
        joy=float(emotion_obj["joy"]),
        sadness=float(emotion_obj["sadness"]),
        label=str(emotion_obj.get("label", "none")),
    )
    entities = []
    for item in _require(obj, "Entities", list):
        if not isinstance(item, dict):
            raise ValueError("Entities elements must be objects")
        entities.append(
            EntityMention(
                surface=str(item["Surface"]),
                label=str(item["Class"]),
                start=int(item["Start"]),
            )
        )
    return EnrichedQuote(
        id=str(_require(obj, "ID", str)),
        speaker=str(_require(obj, "SpeakerName", str)),
        job_title=str(_require(obj, "JobRole", str)),
        affiliation=str(_require(obj, "Affiliation", str)),
        sentences=_string_list(obj, "Sentences"),
        neologisms=_string_list(obj, "Neologism"),
        quoted_phrases=_string_list(obj, "Quotedphrases"),
        similes=_string_list(obj, "Simile"),
        metaphors=_string_list(obj, "Metaphor"),
        emotion=emotion,
        entities=tuple(entities),
    )


def read_jsonl(source: IO[str] | Path | str) -> ReadResult:
    """Read a corpus file; bad lines are skipped and reported.

    Unknown extra keys are ignored with a warning so older readers keep
    working against newer files.
    """
    if isinstance(source, (str, Path)):
        with open(source, encoding="utf-8") as fh:
            return read_jsonl(fh)
    if isinstance(source, str):  # pragma: no cover - guarded above
        source = io.StringIO(source)

    records: list[EnrichedQuote] = []
    errors: list[SchemaError] = []
    for line_number, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            errors.append(SchemaError(line_number, f"invalid JSON: {exc.msg}"))
            continue
        if not isinstance(obj, dict):
            errors.append(SchemaError(line_number, "line is not a JSON object"))
            continue
        extra = set(obj) - set(JSONL_KEYS)
        if extra:
            logger.warning(
                "line %d: ignoring unknown keys: %s", line_number, ", ".join(sorted(extra))
            )
        try:
            records.append(object_to_record(obj))
        except (ValueError, KeyError, TypeError) as exc:
            errors.append(SchemaError(line_number, str(exc)))
    return ReadResult(records, errors)
