from quotekit.records import (
    EmotionScores,
    RawQuoteRecord,
    quote_fingerprint,
    validate_record,
)


def test_fingerprint_deterministic_for_equal_inputs():
    a = quote_fingerprint("Dick Fuld", "You know what, let them line up; I can handle it.")
    b = quote_fingerprint("Dick Fuld", "You know what, let them line up; I can handle it.")
    assert a == b
    assert len(a) == 64
    assert a == a.lower()


def test_fingerprint_empty_quote_equal():
    assert quote_fingerprint("A", "") == quote_fingerprint("A", "")


def test_fingerprint_distinct_preimages_differ():
    # Distinct (speaker, quote) byte sequences, checked directly, must not
    # collide through the separator construction.
    cases = [("A", "x"), ("B", "x"), ("A", "y"), ("Ax", ""), ("", "Ax"), ("A\x1fx", "")]
    seen = {}
    for speaker, quote in cases:
        preimage = speaker.encode() + b"\x1f" + quote.encode()
        fp = quote_fingerprint(speaker, quote)
        for other_preimage, other_fp in seen.items():
            assert other_preimage != preimage
            assert other_fp != fp
        seen[preimage] = fp


def test_validate_well_formed():
    r = RawQuoteRecord("1", "Ann", "CEO", "Acme", "Fine.")
    assert validate_record(r) == []


def test_validate_empty_speaker():
    r = RawQuoteRecord("1", "", "CEO", "Acme", "Fine.")
    assert validate_record(r) == ["speaker_empty"]


def test_validate_whitespace_quote():
    r = RawQuoteRecord("1", "Ann", "", "", "   ")
    assert validate_record(r) == ["quote_empty"]


def test_validate_reports_all_violations():
    r = RawQuoteRecord(" ", "", "", "", "")
    assert validate_record(r) == ["id_empty", "speaker_empty", "quote_empty"]


def test_emotion_label_argmax_and_tie_order():
    assert EmotionScores.from_values(0.5, 0.5, 0.1, 0.0).label == "anger"
    assert EmotionScores.from_values(0.1, 0.5, 0.5, 0.5).label == "fear"
    assert EmotionScores.from_values(0.0, 0.0, 0.0, 0.0).label == "none"
    assert EmotionScores.from_values(0.0, 0.0, 0.0, 0.2).label == "sadness"
