"""Self-contained language identification by rank-order n-gram profiles.

Each language ships as a profile file: the 300 most frequent character
1-3-grams of sample text, one per line, most frequent first. A text is
classified by building its own capped rank profile the same way and summing
rank displacements against each language profile; n-grams missing from a
language profile cost the cap value. Smallest total distance wins, with
ties broken by language code. Texts with fewer than 20 letters are too
short to classify and come back as "und".
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .errors import ConfigError

#: Maximum profile length; also the out-of-profile distance penalty.
PROFILE_CAP = 300

#: Minimum number of letters needed before classification is attempted.
MIN_LETTERS = 20

#: Code returned for texts too short to classify.
UNDETERMINED = "und"

_WORD_RE = re.compile(r"[^\W\d_]+", re.UNICODE)


@dataclass(frozen=True, slots=True)
class LanguageProfile:
    """A language code plus its n-gram -> rank table (dense ranks from 0)."""

    language_code: str
    ngram_ranks: dict[str, int]


def extract_ngrams(text: str) -> Counter:
    """Count the character 1-3-grams of ``text``.

    Words are lowercased, non-letter characters act as boundaries, and each
    word is padded with a single space on both sides so that grams capture
    word-initial and word-final position. Pure-space grams are dropped.
    """
    counts: Counter = Counter()
    for word in _WORD_RE.findall(text.lower()):
        padded = f" {word} "
        size = len(padded)
        for n in (1, 2, 3):
            for i in range(size - n + 1):
                gram = padded[i : i + n]
                if not gram.isspace():
                    counts[gram] += 1
    return counts


def rank_ngrams(counts: Counter, cap: int = PROFILE_CAP) -> dict[str, int]:
    """Order n-grams by (count desc, gram asc) and assign dense ranks."""
    ordered = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))[:cap]
    return {gram: rank for rank, (gram, _) in enumerate(ordered)}


def build_profile(language_code: str, text: str) -> LanguageProfile:
    """Build a profile for ``language_code`` from sample text."""
    return LanguageProfile(language_code, rank_ngrams(extract_ngrams(text)))


def load_profile(path: Path | str) -> LanguageProfile:
    """Load a ``<code>.profile`` file: one n-gram per line, rank order.

    Only the trailing newline is stripped from each line; leading and
    trailing spaces are significant (boundary grams such as " th").
    """
    path = Path(path)
    code = path.name.rsplit(".", 1)[0]
    ranks: dict[str, int] = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            gram = line.rstrip("\n")
            if not gram:
                continue
            if gram in ranks:
                raise ConfigError(f"{path}: duplicate n-gram {gram!r}")
            if gram != gram.lower():
                raise ConfigError(f"{path}: n-gram {gram!r} is not lowercase")
            ranks[gram] = len(ranks)
            if len(ranks) > PROFILE_CAP:
                raise ConfigError(f"{path}: more than {PROFILE_CAP} n-grams")
    if not ranks:
        raise ConfigError(f"{path}: empty profile")
    return LanguageProfile(code, ranks)


def load_profiles(directory: Path | str) -> list[LanguageProfile]:
    """Load every ``*.profile`` file in a directory, sorted by code."""
    directory = Path(directory)
    paths = sorted(directory.glob("*.profile"))
    if not paths:
        raise ConfigError(f"no .profile files in {directory}")
    return [load_profile(p) for p in paths]


def save_profile(profile: LanguageProfile, directory: Path | str) -> Path:
    """Write a profile to ``<directory>/<code>.profile``; returns the path."""
    directory = Path(directory)
    out = directory / f"{profile.language_code}.profile"
    ordered = sorted(profile.ngram_ranks.items(), key=lambda kv: kv[1])
    with open(out, "w", encoding="utf-8") as fh:
        for gram, _ in ordered:
            fh.write(gram + "\n")
    return out


def profile_distance(text_ranks: dict[str, int], profile: LanguageProfile) -> int:
    """Sum of rank displacements; out-of-profile grams cost the cap."""
    ranks = profile.ngram_ranks
    total = 0
    for gram, rank in text_ranks.items():
        other = ranks.get(gram)
        total += PROFILE_CAP if other is None else abs(rank - other)
    return total


def detect_language(text: str, profiles: list[LanguageProfile]) -> str:
    """Return the best-matching language code, or "und" for short texts.

    Deterministic and independent of the order of ``profiles``: distance
    ties break by ascending language code.
    """
    if not profiles:
        raise ValueError("profiles must be non-empty")
    letters = sum(len(w) for w in _WORD_RE.findall(text))
    if letters < MIN_LETTERS:
        return UNDETERMINED
    text_ranks = rank_ngrams(extract_ngrams(text))
    best = min(
        profiles,
        key=lambda p: (profile_distance(text_ranks, p), p.language_code),
    )
    return best.language_code
