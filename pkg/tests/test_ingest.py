import io
import random
import string

from quotekit.ingest import (
    clean_quote,
    dedupe,
    filter_non_english,
    parse_tsv,
    strip_html,
    unescape_html,
)
from quotekit.records import QuoteRecord

from .oracles import html_reference_text


def test_parse_five_fields():
    line = "Q1\tDick Fuld\tCEO\tLehman Brothers\tYou know what, let them line up; I can handle it."
    result = parse_tsv(io.StringIO(line + "\n"))
    assert result.malformed == []
    [r] = result.records
    assert (r.id, r.speaker, r.job_title, r.affiliation) == (
        "Q1",
        "Dick Fuld",
        "CEO",
        "Lehman Brothers",
    )
    assert r.quote.endswith("I can handle it.")


def test_parse_four_fields_maps_job_title_empty():
    result = parse_tsv(io.StringIO("Q2\tAnn\tAcme\tHello there.\n"))
    [r] = result.records
    assert r.job_title == ""
    assert r.affiliation == "Acme"


def test_parse_blank_lines_skipped():
    result = parse_tsv(io.StringIO("\n   \nQ1\tA\tB\tC\tD\n\n"))
    assert len(result.records) == 1
    assert result.malformed == []


def test_parse_malformed_rows_reported_not_fatal():
    result = parse_tsv(io.StringIO("Q2\tonly\ttwo\nQ3\ta\tb\tc\td\te\tf\nQ4\tA\tB\tC\tD\n"))
    assert [m.line_number for m in result.malformed] == [1, 2]
    assert [m.field_count for m in result.malformed] == [3, 6]
    assert [r.id for r in result.records] == ["Q4"]


def test_parse_crlf_and_order_preserved():
    result = parse_tsv(io.StringIO("B\tx\ty\tz\tq\r\nA\tx\ty\tz\tq2\r\n"))
    assert [r.id for r in result.records] == ["B", "A"]


def test_unescape_named_entities():
    assert unescape_html("&lt;") == "<"
    assert unescape_html("&gt;&amp;&quot;&apos;") == '>&"\''
    assert unescape_html("a&nbsp;b") == "a\xa0b"


def test_unescape_identity_on_plain_text():
    assert unescape_html("plain text") == "plain text"


def test_unescape_single_pass():
    assert unescape_html("&amp;lt;") == "&lt;"


def test_unescape_numeric_references():
    assert unescape_html("&#65;&#x42;") == "AB"
    assert unescape_html("&#120;") == "x"


def test_unescape_unknown_left_verbatim():
    assert unescape_html("&bogus; &eacute; &amp") == "&bogus; &eacute; &amp"
    assert unescape_html("&#99999999999;") == "&#99999999999;"


def test_strip_removes_tags():
    assert strip_html("<b>bold</b> claim") == "bold claim"


def test_strip_collapses_whitespace():
    assert strip_html("a  <br/> b") == "a b"


def test_strip_keeps_literal_angle_brackets():
    text = "5 < 6 but > 4"
    assert strip_html(text) == text
    # the stdlib tokenizer agrees: no tag span in this text
    assert html_reference_text(text) == text


def test_strip_matches_reference_on_markup():
    markup = '<p>Some <a href="x">linked</a> text <!-- note --> here</p>'
    assert strip_html(markup) == " ".join(html_reference_text(markup).split())


def test_strip_unbalanced_open_kept():
    assert strip_html("cost < revenue this year") == "cost < revenue this year"
    assert strip_html("a <b unfinished") == "a <b unfinished"


def test_strip_no_wellformed_tag_survives():
    # removal runs to a fixed point even when splicing creates a new span
    out = strip_html("a<<b>z>")
    assert "<b>" not in out
    import re

    assert not re.search(r"</?[A-Za-z][^<>]*>", out)


def test_clean_pipeline_never_grows_entity_input():
    rng = random.Random(7)
    pieces = ["&lt;", "&amp;", "&#65;", "<b>", "</b>", "&gt;", "word", " ", "<i>x</i>"]
    for _ in range(200):
        s = "".join(rng.choice(pieces) for _ in range(rng.randint(1, 12)))
        cleaned = clean_quote(s)
        assert len(cleaned) <= len(s)
        assert "&lt;" not in cleaned
        import re

        assert not re.search(r"</?[A-Za-z][^<>]*>", cleaned)


def _rec(i, speaker, quote):
    return QuoteRecord(id=str(i), speaker=speaker, job_title="", affiliation="", quote=quote)


def test_dedupe_keeps_first_and_counts():
    records = [
        _rec(1, "Dick Fuld", "Let them line up."),
        _rec(2, "Dick Fuld", "Let them line up."),
        _rec(3, "Dick Fuld", "Another quote entirely."),
        _rec(4, "Someone Else", "Let them line up."),
    ]
    kept, removed = dedupe(records)
    assert [r.id for r in kept] == ["1", "3", "4"]
    assert removed == 1


def test_dedupe_idempotent():
    rng = random.Random(13)
    speakers = ["A B", "C D", "E F"]
    quotes = ["one two", "three", "four five six"]
    records = [
        _rec(i, rng.choice(speakers), rng.choice(quotes)) for i in range(300)
    ]
    kept, removed = dedupe(records)
    assert len(kept) + removed == len(records)
    again, removed_again = dedupe(kept)
    assert removed_again == 0
    assert again == kept


def test_filter_non_english(profiles):
    en = _rec(1, "A", "The quick brown fox jumps over the lazy dog repeatedly.")
    de = _rec(2, "B", "Der schnelle braune Fuchs springt über den faulen Hund.")
    kept, dropped = filter_non_english([en, de], profiles, frozenset({"en"}))
    assert kept == [en]
    assert dropped == 1


def test_filter_keeps_undetermined(profiles):
    short = _rec(1, "A", "?!")
    kept, dropped = filter_non_english([short], profiles, frozenset({"en"}))
    assert kept == [short]
    assert dropped == 0


def test_filter_empty_input(profiles):
    assert filter_non_english([], profiles, frozenset({"en"})) == ([], 0)


def test_filter_counts_add_up(profiles):
    rng = random.Random(5)
    texts = [
        "The committee will meet again next month to review the outlook.",
        "Die Regierung hat ein Paket von Maßnahmen angekündigt, sagte er.",
        "xy",
    ]
    records = [_rec(i, "S", rng.choice(texts)) for i in range(60)]
    kept, dropped = filter_non_english(records, profiles, frozenset({"en"}))
    assert len(kept) + dropped == len(records)
    # order preserved
    kept_ids = [r.id for r in kept]
    assert kept_ids == sorted(kept_ids, key=int)
