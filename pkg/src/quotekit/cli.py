"""Command-line interface: ``enrich`` a raw TSV, ``query`` the result.

Exit codes: 0 success, 1 usage error, 2 data error (unreadable config,
unusable resource files, failed writes).
"""

from __future__ import annotations

import argparse
import logging
import sys

from .config import PipelineConfig
from .errors import ConfigError, EmptyTable, IoFailure, QuotekitError
from .ingest import parse_tsv
from .jsonl import JSONL_KEYS, read_jsonl, record_to_line, write_jsonl
from .pipeline import enrich_records, write_stats
from .query import QuerySpec, load_stopwords, query_corpus, term_frequencies
from .wordcloud import render_wordcloud_svg

logger = logging.getLogger("quotekit")

USAGE_ERROR = 1
DATA_ERROR = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the documented contract is 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="quotekit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    enrich = sub.add_parser("enrich", help="clean, normalize, impute and annotate a raw TSV")
    enrich.add_argument("--input", required=True, help="raw TSV file (UTF-8)")
    enrich.add_argument("--config", help="TOML config file (defaults are bundled)")
    enrich.add_argument("--output", required=True, help="JSONL corpus to write")
    enrich.add_argument("--stats", help="optional per-stage stats TSV to write")

    query = sub.add_parser("query", help="search an enriched corpus by key and terms")
    query.add_argument("--corpus", required=True, help="JSONL corpus file")
    query.add_argument("--key", required=True, choices=JSONL_KEYS)
    query.add_argument("--terms", required=True, help="comma-delimited search words")
    query.add_argument("--cloud", help="write a word cloud SVG of the matches here")
    return parser


def _cmd_enrich(args) -> int:
    config = PipelineConfig.from_toml(args.config) if args.config else PipelineConfig()
    config.validate()
    try:
        with open(args.input, encoding="utf-8") as fh:
            parsed = parse_tsv(fh)
    except OSError as exc:
        logger.error("cannot read %s: %s", args.input, exc)
        return DATA_ERROR
    for row in parsed.malformed:
        logger.warning(
            "skipping line %d: %d fields (expected 4 or 5)", row.line_number, row.field_count
        )

    result = enrich_records(parsed.records, config)
    written = write_jsonl(result.records, args.output)
    if args.stats:
        write_stats(result.stats, args.stats)
    for stage, metric, value in result.stats:
        logger.info("%s: %s = %d", stage, metric, value)
    logger.info("wrote %d records to %s", written, args.output)
    return 0


def _cmd_query(args) -> int:
    try:
        loaded = read_jsonl(args.corpus)
    except OSError as exc:
        logger.error("cannot read %s: %s", args.corpus, exc)
        return DATA_ERROR
    for err in loaded.errors:
        logger.warning("line %d skipped: %s", err.line_number, err.reason)

    try:
        spec = QuerySpec.from_cli(args.key, args.terms, args.cloud)
    except ValueError as exc:
        logger.error("%s", exc)
        return USAGE_ERROR

    matches = query_corpus(loaded.records, spec)
    for record in matches:
        print(record_to_line(record))
    logger.info("matched %d of %d records", len(matches), len(loaded.records))

    if spec.output_path is not None:
        stopwords = load_stopwords(PipelineConfig().stopwords_path)
        table = term_frequencies(matches, spec.key, stopwords)
        size = render_wordcloud_svg(table, spec.output_path)
        logger.info("wrote %d bytes to %s", size, spec.output_path)
    return 0


def main(argv=None) -> int:
    logging.basicConfig(
        stream=sys.stderr, level=logging.INFO, format="%(levelname)s %(message)s"
    )
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "enrich":
            return _cmd_enrich(args)
        return _cmd_query(args)
    except (ConfigError, IoFailure, EmptyTable) as exc:
        logger.error("%s", exc)
        return DATA_ERROR
    except QuotekitError as exc:  # any other fatal package error
        logger.error("%s", exc)
        return DATA_ERROR


if __name__ == "__main__":
    sys.exit(main())
