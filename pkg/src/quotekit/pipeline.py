"""End-to-end pipeline assembly and run statistics.

Stage order is fixed: clean -> language filter -> name normalization ->
dedup -> transposition repair -> title normalization -> imputation ->
annotation. Dedup must see normalized names (duplicates match on speaker
plus quote), transposition must see titles before they are acronymized
(the vocabulary match is on raw title strings), and imputation runs last
over the largest consistent record set.
"""

from __future__ import annotations

from pathlib import Path
from typing import NamedTuple, Sequence

from sklearn.pipeline import Pipeline

from .config import PipelineConfig
from .records import EnrichedQuote, RawQuoteRecord
from .transformers import (
    Deduplicator,
    FieldImputer,
    LanguageFilter,
    NameNormalizer,
    QuoteAnnotator,
    QuoteCleaner,
    TitleNormalizer,
    TranspositionFixer,
)


def build_pipeline(config: PipelineConfig | None = None) -> Pipeline:
    """The full enrichment pipeline as a scikit-learn ``Pipeline``.

    ``fit_transform`` on a list of ``RawQuoteRecord`` yields the enriched
    corpus; individual stages remain addressable for parameter overrides
    (e.g. ``set_params(language__allowlist=("en", "de"))``).
    """
    cfg = (config or PipelineConfig()).validate()
    return Pipeline(
        [
            ("clean", QuoteCleaner()),
            ("language", LanguageFilter(allowlist=tuple(sorted(cfg.language_allowlist)),
                                        profile_dir=cfg.profile_dir)),
            ("names", NameNormalizer(rules_path=cfg.name_rules_path)),
            ("dedupe", Deduplicator()),
            ("transposition", TranspositionFixer()),
            ("titles", TitleNormalizer(rules_path=cfg.title_rules_path)),
            ("impute", FieldImputer()),
            ("annotate", QuoteAnnotator(config=cfg)),
        ]
    )


class EnrichResult(NamedTuple):
    records: list[EnrichedQuote]
    stats: list[tuple[str, str, int]]  # (stage, metric, value)


def enrich_records(
    raw_records: Sequence[RawQuoteRecord],
    config: PipelineConfig | None = None,
) -> EnrichResult:
    """Run the pipeline and collect per-stage counts for reporting."""
    pipeline = build_pipeline(config)
    records = pipeline.fit_transform(list(raw_records))

    steps = pipeline.named_steps
    stats: list[tuple[str, str, int]] = [
        ("parse", "records_in", steps["clean"].n_input_),
        ("clean", "invalid_dropped", steps["clean"].n_invalid_),
        ("clean", "empty_quote_dropped", steps["clean"].n_empty_after_clean_),
        ("language_filter", "non_english_dropped", steps["language"].n_dropped_),
        ("dedupe", "duplicates_removed", steps["dedupe"].n_removed_),
        ("transposition", "moved_to_job_title", steps["transposition"].n_moved_),
        ("transposition", "affiliation_cleared", steps["transposition"].n_cleared_),
        ("imputation", "blank_job_titles_before", steps["impute"].blanks_before_[0]),
        ("imputation", "blank_affiliations_before", steps["impute"].blanks_before_[1]),
        ("imputation", "job_titles_imputed", steps["impute"].n_imputed_job_title_),
        ("imputation", "affiliations_imputed", steps["impute"].n_imputed_affiliation_),
        ("imputation", "blank_job_titles_after", steps["impute"].blanks_after_[0]),
        ("imputation", "blank_affiliations_after", steps["impute"].blanks_after_[1]),
        ("output", "records_out", len(records)),
    ]
    return EnrichResult(records, stats)


def write_stats(stats: Sequence[tuple[str, str, int]], path: Path | str) -> None:
    """Write stage TAB metric TAB value lines."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for stage, metric, value in stats:
            fh.write(f"{stage}\t{metric}\t{value}\n")
