"""Scikit-learn style transformers for each corpus-level pipeline stage.

Every stage that needs corpus statistics (the title vocabulary, the
surname index, the imputation tables, the collocation counts) learns them
in ``fit`` and applies them per record in ``transform``, so the stages
compose with ``sklearn.pipeline.Pipeline`` and expose their settings via
``get_params``/``set_params``. Fitted state lives in trailing-underscore
attributes, sklearn convention. Transformers that drop records (the
language filter, the deduplicator) record how many in counter attributes
after ``transform``.

The functional core lives in the sibling modules; these classes only wire
fitting and application together.
"""

from __future__ import annotations

from dataclasses import replace

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from . import figurative, normalize
from .affect import EmotionLexicon, Gazetteer, extract_entities, score_emotions
from .config import PipelineConfig
from .ingest import clean_quote, collapse_whitespace, dedupe, filter_non_english
from .langid import load_profiles
from .records import (
    EnrichedQuote,
    QuoteRecord,
    RawQuoteRecord,
    validate_record,
)
from .taxonomy import TaxonomyStore
from .text import PosLexicon, load_abbreviations, pos_tag, split_sentences, tokenize
from .validation import check_records


class QuoteCleaner(BaseEstimator, TransformerMixin):
    """Raw rows to clean records: decode entities, strip markup, drop junk.

    Rows failing basic validation (empty id, speaker, or quote) and rows
    whose quote is empty once the markup is gone are dropped.

    Attributes set by ``transform``: ``n_input_``, ``n_invalid_``,
    ``n_empty_after_clean_``.
    """

    def fit(self, X, y=None):
        self.fitted_ = True
        return self

    def transform(self, X):
        records = check_records(X, RawQuoteRecord)
        self.n_input_ = len(records)
        self.n_invalid_ = 0
        self.n_empty_after_clean_ = 0
        out: list[QuoteRecord] = []
        for raw in records:
            cleaned = RawQuoteRecord(
                id=raw.id.strip(),
                speaker=collapse_whitespace(raw.speaker),
                job_title=collapse_whitespace(raw.job_title),
                affiliation=collapse_whitespace(raw.affiliation),
                quote=clean_quote(raw.quote),
            )
            if validate_record(cleaned):
                if validate_record(raw):
                    self.n_invalid_ += 1
                else:
                    self.n_empty_after_clean_ += 1
                continue
            out.append(
                QuoteRecord(
                    id=cleaned.id,
                    speaker=cleaned.speaker,
                    job_title=cleaned.job_title,
                    affiliation=cleaned.affiliation,
                    quote=cleaned.quote,
                )
            )
        return out


class LanguageFilter(BaseEstimator, TransformerMixin):
    """Drop records whose quote is detected as an unlisted language.

    Parameters
    ----------
    allowlist : iterable of language codes to keep ("und" always passes).
    profile_dir : directory of ``<code>.profile`` files; None uses the
        bundled profiles.

    Attributes: ``profiles_`` after fit; ``n_dropped_`` after transform.
    """

    def __init__(self, allowlist=("en",), profile_dir=None):
        self.allowlist = allowlist
        self.profile_dir = profile_dir

    def fit(self, X, y=None):
        directory = self.profile_dir or PipelineConfig().profile_dir
        self.profiles_ = load_profiles(directory)
        return self

    def transform(self, X):
        check_is_fitted(self)
        records = check_records(X, QuoteRecord)
        kept, self.n_dropped_ = filter_non_english(
            records, self.profiles_, frozenset(self.allowlist)
        )
        return kept


class NameNormalizer(BaseEstimator, TransformerMixin):
    """Title-case speakers and expand known or inferrable single names.

    ``fit`` loads the manual single-name rules and indexes the corpus's
    multi-token names by (last token, affiliation) for majority expansion.
    """

    def __init__(self, rules_path=None):
        self.rules_path = rules_path

    def fit(self, X, y=None):
        records = check_records(X, QuoteRecord)
        path = self.rules_path or PipelineConfig().name_rules_path
        self.rules_ = normalize.NameRuleTable.load(path)
        self.full_name_index_ = normalize.build_full_name_index(records)
        return self

    def transform(self, X):
        check_is_fitted(self)
        records = check_records(X, QuoteRecord)
        return [
            replace(
                r,
                speaker=normalize.normalize_name(
                    r.speaker, r.affiliation, self.rules_, self.full_name_index_
                ),
            )
            for r in records
        ]


class Deduplicator(BaseEstimator, TransformerMixin):
    """Keep the first record per (speaker, quote) fingerprint.

    Attribute after transform: ``n_removed_``.
    """

    def fit(self, X, y=None):
        self.fitted_ = True
        return self

    def transform(self, X):
        records = check_records(X, QuoteRecord)
        kept, self.n_removed_ = dedupe(records)
        return kept


class TranspositionFixer(BaseEstimator, TransformerMixin):
    """Move (or clear) affiliation values that are really job titles.

    ``fit`` collects the corpus's title vocabulary; ``transform`` repairs
    each record against it. Attributes after transform: ``n_moved_``,
    ``n_cleared_``.
    """

    def fit(self, X, y=None):
        records = check_records(X, QuoteRecord)
        self.title_vocabulary_ = normalize.build_title_vocabulary(records)
        return self

    def transform(self, X):
        check_is_fitted(self)
        records = check_records(X, QuoteRecord)
        self.n_moved_ = 0
        self.n_cleared_ = 0
        out = []
        for r in records:
            fixed = normalize.fix_transposition(r, self.title_vocabulary_)
            if fixed is not r:
                if fixed.job_title != r.job_title:
                    self.n_moved_ += 1
                else:
                    self.n_cleared_ += 1
            out.append(fixed)
        return out


class TitleNormalizer(BaseEstimator, TransformerMixin):
    """Simplify compound titles, apply acronym rules, fix casing."""

    def __init__(self, rules_path=None):
        self.rules_path = rules_path

    def fit(self, X, y=None):
        path = self.rules_path or PipelineConfig().title_rules_path
        self.rules_ = normalize.TitleRuleTable.load(path)
        return self

    def transform(self, X):
        check_is_fitted(self)
        records = check_records(X, QuoteRecord)
        return [
            replace(r, job_title=normalize.normalize_job_title(r.job_title, self.rules_))
            for r in records
        ]


class FieldImputer(BaseEstimator, TransformerMixin):
    """Fill blank job titles and affiliations by majority matching.

    The index is built once in ``fit`` from the pre-imputation record set
    (single round, no fixpoint iteration), so results are deterministic
    and independent of record order. Attributes after transform:
    ``n_imputed_job_title_``, ``n_imputed_affiliation_``,
    ``blanks_before_``, ``blanks_after_`` (both (titles, affiliations)).
    """

    def fit(self, X, y=None):
        records = check_records(X, QuoteRecord)
        self.index_ = normalize.build_imputation_index(records)
        return self

    def transform(self, X):
        check_is_fitted(self)
        records = check_records(X, QuoteRecord)
        self.blanks_before_ = normalize.count_blanks(records)
        self.n_imputed_job_title_ = 0
        self.n_imputed_affiliation_ = 0
        out = []
        for r in records:
            imputed = normalize.impute_job_title(r, self.index_)
            if imputed.imputed_job_title and not r.imputed_job_title:
                self.n_imputed_job_title_ += 1
            final = normalize.impute_affiliation(imputed, self.index_)
            if final.imputed_affiliation and not r.imputed_affiliation:
                self.n_imputed_affiliation_ += 1
            out.append(final)
        self.blanks_after_ = normalize.count_blanks(out)
        return out


class QuoteAnnotator(BaseEstimator, TransformerMixin):
    """Annotate cleaned records into enriched quotes.

    ``fit`` makes the corpus-wide passes (collocation counts for PMI, word
    frequencies for the neologism gate) and loads the static resources
    (tagger lexicon, taxonomy, dictionaries, emotion lexicon, gazetteer).
    The gazetteer is optionally seeded with the corpus's own speakers
    (PERSON) and affiliations (ORG). ``transform`` is then a pure
    per-record function.

    Parameters
    ----------
    config : PipelineConfig or None for the bundled defaults.
    """

    def __init__(self, config=None):
        self.config = config

    def _config(self) -> PipelineConfig:
        return self.config if self.config is not None else PipelineConfig()

    def fit(self, X, y=None):
        records = check_records(X, QuoteRecord)
        cfg = self._config()

        self.pos_lexicon_ = PosLexicon.load(cfg.pos_lexicon_path, cfg.suffix_rules_path)
        self.taxonomy_ = TaxonomyStore.load(cfg.taxonomy_path)
        self.abbreviations_ = load_abbreviations(cfg.abbreviations_path)
        self.emotion_lexicon_ = EmotionLexicon.load(cfg.emotion_lexicon_path)

        dictionary = set()
        for path in (cfg.dictionary_us_path, cfg.dictionary_uk_path):
            with open(path, encoding="utf-8") as fh:
                for line in fh:
                    word = line.strip().lower()
                    if word and not word.startswith("#"):
                        dictionary.add(word)
        self.dictionary_ = frozenset(dictionary)

        gazetteer = Gazetteer.load(cfg.gazetteer_path)
        if cfg.seed_gazetteer_from_corpus:
            for r in records:
                if r.speaker.strip():
                    gazetteer.seed(r.speaker, "PERSON")
                if r.affiliation.strip():
                    gazetteer.seed(r.affiliation, "ORG")
        self.gazetteer_ = gazetteer

        self.corpus_freq_ = figurative.count_corpus_words(r.quote for r in records)
        self.pmi_table_ = figurative.harvest_np_of_np(self._iter_tagged(records))
        return self

    def _iter_tagged(self, records):
        for r in records:
            for sentence in split_sentences(r.quote, self.abbreviations_):
                yield pos_tag(tokenize(sentence), self.pos_lexicon_), sentence

    def transform(self, X):
        check_is_fitted(self)
        records = check_records(X, QuoteRecord)
        return [self._annotate(r) for r in records]

    def _annotate(self, r: QuoteRecord) -> EnrichedQuote:
        cfg = self._config()
        sentences = split_sentences(r.quote, self.abbreviations_)
        quote_tokens = pos_tag(tokenize(r.quote), self.pos_lexicon_)
        word_tokens_lower = [t.surface.lower() for t in quote_tokens]

        entities = extract_entities(r.quote, self.gazetteer_)
        quoted_phrases = figurative.extract_highlighted(
            r.quote, cfg.highlight_min_chars, cfg.highlight_max_tokens
        )
        neologisms = figurative.detect_neologisms(
            quote_tokens,
            (r.speaker, r.job_title, r.affiliation),
            entities,
            self.dictionary_,
            self.corpus_freq_,
            cfg.min_neologism_count,
        )

        similes: list[str] = []
        metaphors: list[str] = []
        for sentence in sentences:
            tokens = pos_tag(tokenize(sentence), self.pos_lexicon_)
            similes.extend(m.text for m in figurative.extract_similes(tokens, sentence))
            metaphors.extend(
                m.text
                for m in figurative.extract_isa_metaphors(
                    tokens, sentence, self.taxonomy_, cfg.check_shared_hypernyms
                )
            )
            metaphors.extend(
                m.text
                for m in figurative.extract_of_metaphors(
                    tokens, sentence, self.pmi_table_, cfg.pmi_threshold, cfg.pmi_variant
                )
            )

        emotion = score_emotions(word_tokens_lower, self.emotion_lexicon_)
        return EnrichedQuote(
            id=r.id,
            speaker=r.speaker,
            job_title=r.job_title,
            affiliation=r.affiliation,
            sentences=tuple(sentences),
            neologisms=tuple(neologisms),
            quoted_phrases=tuple(quoted_phrases),
            similes=tuple(similes),
            metaphors=tuple(metaphors),
            emotion=emotion,
            entities=tuple(entities),
        )
