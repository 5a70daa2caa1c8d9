"""Name and job-title normalization, transposition repair, and imputation.

The extractor that produced the raw corpus conflated job titles with
affiliations, left names in inconsistent case, and dropped attributes. The
repairs here are rule-based and corpus-informed: the title vocabulary used
to detect transposed values, the (last token, affiliation) index used to
expand bare surnames, and the majority indexes used to fill blanks are all
computed from the record set itself.
"""

from __future__ import annotations

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable, Sequence

from .errors import ConfigError
from .records import QuoteRecord

logger = logging.getLogger(__name__)


def title_case(name: str) -> str:
    """Uppercase the first letter of each whitespace token, keep the rest.

    Interior case survives: "McDonald" stays "McDonald", so the transform
    is idempotent and never destroys deliberate casing.
    """
    return " ".join(t[:1].upper() + t[1:] for t in name.split())


# ---------------------------------------------------------------------------
# Rule tables
# ---------------------------------------------------------------------------


def _read_rule_lines(path: Path | str) -> Iterable[tuple[int, str, str]]:
    with open(path, encoding="utf-8") as fh:
        for line_number, raw in enumerate(fh, start=1):
            line = raw.rstrip("\r\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ConfigError(f"{path}:{line_number}: expected 2 tab-separated columns")
            yield line_number, parts[0].strip(), parts[1].strip()


@dataclass(frozen=True, slots=True)
class NameRuleTable:
    """Manual single-name expansions, e.g. a mononym to the full name.

    Keys are stored lowercased; values are title-cased on load so that
    applying the expansion twice is a no-op.
    """

    single_name_map: dict[str, str]

    @classmethod
    def load(cls, path: Path | str) -> "NameRuleTable":
        mapping: dict[str, str] = {}
        for line_number, pattern, replacement in _read_rule_lines(path):
            key = pattern.lower()
            if " " in pattern or not key:
                raise ConfigError(f"{path}:{line_number}: key must be a single token")
            value = title_case(replacement)
            if len(value.split()) < 2:
                raise ConfigError(f"{path}:{line_number}: replacement must have >= 2 tokens")
            if key in mapping:
                raise ConfigError(f"{path}:{line_number}: duplicate key {pattern!r}")
            mapping[key] = value
        return cls(mapping)


@dataclass(frozen=True, slots=True)
class TitleRuleTable:
    """Manual title-to-acronym rules, keyed by lowercased title phrase."""

    manual_acronym_map: dict[str, str]

    @classmethod
    def load(cls, path: Path | str) -> "TitleRuleTable":
        mapping: dict[str, str] = {}
        for line_number, pattern, replacement in _read_rule_lines(path):
            key = pattern.lower()
            if not key:
                raise ConfigError(f"{path}:{line_number}: empty key")
            if not (replacement.isupper() and 2 <= len(replacement) <= 5):
                raise ConfigError(
                    f"{path}:{line_number}: acronym must be uppercase, 2-5 chars"
                )
            if key in mapping:
                raise ConfigError(f"{path}:{line_number}: duplicate key {pattern!r}")
            mapping[key] = replacement
        # An acronym that is itself a key must map to itself, otherwise
        # normalisation would not be idempotent.
        for key, value in mapping.items():
            remapped = mapping.get(value.lower())
            if remapped is not None and remapped != value:
                raise ConfigError(
                    f"{path}: acronym {value!r} (from {key!r}) remaps to {remapped!r}"
                )
        return cls(mapping)


# ---------------------------------------------------------------------------
# Transposition repair
# ---------------------------------------------------------------------------


def build_title_vocabulary(records: Sequence[QuoteRecord]) -> set[str]:
    """Distinct non-empty job-title values, case-folded and trimmed."""
    return {r.job_title.strip().lower() for r in records if r.job_title.strip()}


def fix_transposition(r: QuoteRecord, title_vocab: set[str]) -> QuoteRecord:
    """Repair an affiliation value that is really a job title.

    If the affiliation matches the title vocabulary and the title slot is
    empty, the value moves across. If the title slot is already filled the
    bogus affiliation is cleared: keeping a known job title in the
    affiliation column would poison imputation.
    """
    affiliation = r.affiliation.strip()
    if not affiliation or affiliation.lower() not in title_vocab:
        return r
    if not r.job_title.strip():
        return replace(r, job_title=affiliation, affiliation="")
    logger.info(
        "record %s: clearing affiliation %r (matches a job title)", r.id, affiliation
    )
    return replace(r, affiliation="")


# ---------------------------------------------------------------------------
# Speaker names
# ---------------------------------------------------------------------------


def build_full_name_index(records: Sequence[QuoteRecord]) -> dict[tuple[str, str], str]:
    """Index multi-token speakers by (last token, affiliation), lowercased.

    The value is the majority full name for that key. Keys where two
    distinct names tie for the majority are dropped: an ambiguous surname
    must not be expanded.
    """
    votes: dict[tuple[str, str], Counter] = defaultdict(Counter)
    for r in records:
        name = title_case(r.speaker)
        tokens = name.split()
        affiliation = r.affiliation.strip().lower()
        if len(tokens) < 2 or not affiliation:
            continue
        votes[(tokens[-1].lower(), affiliation)][name] += 1
    index: dict[tuple[str, str], str] = {}
    for key, counter in votes.items():
        ranked = counter.most_common()
        if len(ranked) > 1 and ranked[0][1] == ranked[1][1]:
            continue
        index[key] = ranked[0][0]
    return index


def normalize_name(
    speaker: str,
    affiliation: str,
    rules: NameRuleTable,
    full_name_index: dict[tuple[str, str], str],
) -> str:
    """Title-case a speaker name and expand known single names.

    Expansion order: manual rule first, then the corpus index (which needs
    a non-empty affiliation). Multi-token names only get the case fix.
    """
    name = title_case(speaker)
    tokens = name.split()
    if len(tokens) != 1:
        return name
    token = tokens[0]
    manual = rules.single_name_map.get(token.lower())
    if manual is not None:
        return manual
    affiliation = affiliation.strip().lower()
    if affiliation:
        indexed = full_name_index.get((token.lower(), affiliation))
        if indexed is not None:
            return indexed
    return name


# ---------------------------------------------------------------------------
# Job titles
# ---------------------------------------------------------------------------


def normalize_job_title(title: str, rules: TitleRuleTable) -> str:
    """Normalize one job title.

    Steps, in order: keep the left side of the first "and" (compound
    titles), apply the manual acronym table, contract three-word
    "Chief ..." titles to their initials, else title-case. The "and" split
    only fires when it leaves a non-empty left side.
    """
    tokens = title.split()
    if not tokens:
        return ""
    for i, token in enumerate(tokens):
        if token.lower() == "and" and i > 0:
            tokens = tokens[:i]
            break
    phrase = " ".join(tokens)
    manual = rules.manual_acronym_map.get(phrase.lower())
    if manual is not None:
        return manual
    if len(tokens) == 3 and tokens[0].lower() == "chief":
        return "".join(t[:1].upper() for t in tokens)
    return title_case(phrase)


# ---------------------------------------------------------------------------
# Imputation
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class ImputationIndex:
    """Majority-vote lookup tables built once from the pre-imputation set.

    ``by_name_affiliation`` maps (speaker, affiliation) to a multiset of
    job titles seen for that pair; ``by_name_title`` is the symmetric
    table for affiliations. Only records where both key fields and the
    counted field are non-empty contribute.
    """

    by_name_affiliation: dict[tuple[str, str], Counter]
    by_name_title: dict[tuple[str, str], Counter]


def build_imputation_index(records: Sequence[QuoteRecord]) -> ImputationIndex:
    by_name_affiliation: dict[tuple[str, str], Counter] = defaultdict(Counter)
    by_name_title: dict[tuple[str, str], Counter] = defaultdict(Counter)
    for r in records:
        speaker = r.speaker.strip()
        title = r.job_title.strip()
        affiliation = r.affiliation.strip()
        if not speaker:
            continue
        if affiliation and title:
            by_name_affiliation[(speaker, affiliation)][title] += 1
            by_name_title[(speaker, title)][affiliation] += 1
    return ImputationIndex(dict(by_name_affiliation), dict(by_name_title))


def _modal_value(counter: Counter) -> str:
    # Highest count wins; ties break by ascending byte order, which for
    # UTF-8 equals code point order, so plain string comparison is exact.
    return min(counter.items(), key=lambda kv: (-kv[1], kv[0]))[0]


def impute_job_title(r: QuoteRecord, idx: ImputationIndex) -> QuoteRecord:
    """Fill an empty job title from the majority for (speaker, affiliation)."""
    if r.job_title.strip():
        return r
    counter = idx.by_name_affiliation.get((r.speaker.strip(), r.affiliation.strip()))
    if not counter:
        return r
    return replace(r, job_title=_modal_value(counter), imputed_job_title=True)


def impute_affiliation(r: QuoteRecord, idx: ImputationIndex) -> QuoteRecord:
    """Fill an empty affiliation from the majority for (speaker, job title)."""
    if r.affiliation.strip():
        return r
    counter = idx.by_name_title.get((r.speaker.strip(), r.job_title.strip()))
    if not counter:
        return r
    return replace(r, affiliation=_modal_value(counter), imputed_affiliation=True)


def count_blanks(records: Sequence[QuoteRecord]) -> tuple[int, int]:
    """(blank job titles, blank affiliations) in a record set."""
    blank_titles = sum(1 for r in records if not r.job_title.strip())
    blank_affiliations = sum(1 for r in records if not r.affiliation.strip())
    return blank_titles, blank_affiliations
