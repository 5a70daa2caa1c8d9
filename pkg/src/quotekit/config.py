"""Pipeline configuration: thresholds, rule tables, and data file paths.

Defaults point at the data files bundled with the package, so an empty
config runs out of the box; a TOML file overrides any subset of fields.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, fields, replace
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .errors import ConfigError

DATA_DIR = Path(__file__).resolve().parent / "data"

_PATH_FIELDS = (
    "profile_dir",
    "name_rules_path",
    "title_rules_path",
    "pos_lexicon_path",
    "suffix_rules_path",
    "taxonomy_path",
    "dictionary_us_path",
    "dictionary_uk_path",
    "emotion_lexicon_path",
    "gazetteer_path",
    "stopwords_path",
    "abbreviations_path",
)


@dataclass(frozen=True)
class PipelineConfig:
    """Everything that governs a pipeline run.

    ``pmi_threshold`` accepts -inf (TOML: ``-inf``) to keep every scored
    pair. ``dedup_keep_policy`` exists for the record but only "first" is
    defined.
    """

    min_neologism_count: int = 3
    pmi_threshold: float = 1.0
    pmi_variant: str = "paper"
    language_allowlist: frozenset[str] = frozenset({"en"})
    dedup_keep_policy: str = "first"
    check_shared_hypernyms: bool = False
    seed_gazetteer_from_corpus: bool = True
    highlight_min_chars: int = 2
    highlight_max_tokens: int = 15

    profile_dir: Path = DATA_DIR / "profiles"
    name_rules_path: Path = DATA_DIR / "name_rules.tsv"
    title_rules_path: Path = DATA_DIR / "title_rules.tsv"
    pos_lexicon_path: Path = DATA_DIR / "pos_lexicon.tsv"
    suffix_rules_path: Path = DATA_DIR / "pos_suffixes.tsv"
    taxonomy_path: Path = DATA_DIR / "taxonomy.tsv"
    dictionary_us_path: Path = DATA_DIR / "dictionary_us.txt"
    dictionary_uk_path: Path = DATA_DIR / "dictionary_uk.txt"
    emotion_lexicon_path: Path = DATA_DIR / "emotion_lexicon.tsv"
    gazetteer_path: Path = DATA_DIR / "gazetteer.tsv"
    stopwords_path: Path = DATA_DIR / "stopwords.txt"
    abbreviations_path: Path = DATA_DIR / "abbreviations.txt"

    def validate(self) -> "PipelineConfig":
        """Check invariants and that every referenced path resolves."""
        if self.min_neologism_count < 1:
            raise ConfigError("min_neologism_count must be >= 1")
        if self.pmi_variant not in ("paper", "standard"):
            raise ConfigError(f"pmi_variant must be 'paper' or 'standard', got {self.pmi_variant!r}")
        if self.dedup_keep_policy != "first":
            raise ConfigError("dedup_keep_policy is fixed to 'first'")
        if not self.language_allowlist:
            raise ConfigError("language_allowlist must not be empty")
        if self.highlight_min_chars < 1 or self.highlight_max_tokens < 1:
            raise ConfigError("highlight bounds must be positive")
        for name in _PATH_FIELDS:
            path = getattr(self, name)
            if not Path(path).exists():
                raise ConfigError(f"{name}: no such file or directory: {path}")
        return self

    @classmethod
    def from_toml(cls, path: Path | str) -> "PipelineConfig":
        """Load overrides from a TOML file.

        Relative paths in the file resolve against the file's directory.
        Unknown keys are rejected so typos fail loudly.
        """
        path = Path(path)
        try:
            with open(path, "rb") as fh:
                raw = tomllib.load(fh)
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        except tomllib.TOMLDecodeError as exc:
            raise ConfigError(f"cannot parse config {path}: {exc}") from exc

        known = {f.name for f in fields(cls)}
        unknown = set(raw) - known
        if unknown:
            raise ConfigError(f"{path}: unknown config keys: {', '.join(sorted(unknown))}")

        base = path.parent
        updates: dict = {}
        for key, value in raw.items():
            if key in _PATH_FIELDS:
                candidate = Path(value)
                updates[key] = candidate if candidate.is_absolute() else base / candidate
            elif key == "language_allowlist":
                if not isinstance(value, list):
                    raise ConfigError(f"{path}: language_allowlist must be an array")
                updates[key] = frozenset(value)
            else:
                updates[key] = value
        try:
            return replace(cls(), **updates)
        except TypeError as exc:
            raise ConfigError(f"{path}: {exc}") from exc
