"""quotekit: deterministic enrichment for reported-speech corpora.

Raw TSV rows (id, speaker, job title, affiliation, quote) go in; cleaned,
normalized, imputed and linguistically annotated JSONL records come out,
with a small query CLI over the result. Every stage is rule-based and
reproducible: same input, same bytes.
"""

from .config import PipelineConfig
from .errors import (
    ConfigError,
    EmptyTable,
    IoFailure,
    QuotekitError,
    UnknownKey,
    ZeroCount,
)
from .jsonl import JSONL_KEYS, read_jsonl, write_jsonl
from .pipeline import build_pipeline, enrich_records
from .query import QuerySpec, query_corpus, term_frequencies
from .records import (
    EmotionScores,
    EnrichedQuote,
    EntityMention,
    MetaphorMatch,
    QuoteRecord,
    RawQuoteRecord,
    SimileMatch,
    quote_fingerprint,
    validate_record,
)
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
from .wordcloud import render_wordcloud_svg

__version__ = "0.1.0"

__all__ = [
    "PipelineConfig",
    "QuotekitError",
    "ConfigError",
    "IoFailure",
    "UnknownKey",
    "EmptyTable",
    "ZeroCount",
    "JSONL_KEYS",
    "read_jsonl",
    "write_jsonl",
    "build_pipeline",
    "enrich_records",
    "QuerySpec",
    "query_corpus",
    "term_frequencies",
    "RawQuoteRecord",
    "QuoteRecord",
    "EnrichedQuote",
    "SimileMatch",
    "MetaphorMatch",
    "EmotionScores",
    "EntityMention",
    "quote_fingerprint",
    "validate_record",
    "QuoteCleaner",
    "LanguageFilter",
    "NameNormalizer",
    "Deduplicator",
    "TranspositionFixer",
    "TitleNormalizer",
    "FieldImputer",
    "QuoteAnnotator",
    "render_wordcloud_svg",
]
