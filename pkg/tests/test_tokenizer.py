from __future__ import annotations

from hypothesis import given
from hypothesis import strategies as st

from conftest import fixture_path
from negeval import TokenizerConfig, tokenize


def surfaces(text, config=None):
    return [span.text for span in tokenize(text, config)]


def test_punctuation_splits_off():
    assert surfaces("Mary, run!") == ["Mary", ",", "run", "!"]


def test_url_kept_whole():
    assert surfaces("see http://x.y/z now") == ["see", "http://x.y/z", "now"]


def test_url_final_period_stays_outside():
    assert surfaces("see http://x.y/z.") == ["see", "http://x.y/z", "."]


def test_abbreviations_kept_whole():
    assert surfaces("Dr. Smith met Mr. Jones") == ["Dr.", "Smith", "met", "Mr.", "Jones"]


def test_word_internal_characters():
    assert surfaces("IL-2 rose 3.5-fold") == ["IL-2", "rose", "3.5-fold"]
    assert surfaces("don't stop...") == ["don't", "stop", "..."]


def test_mixed_punctuation_runs():
    assert surfaces("(no),") == ["(", "no", ")", ","]


def test_offsets_are_ordered_and_nonoverlapping():
    spans = tokenize("Mary, run to http://a.b now!")
    for first, second in zip(spans, spans[1:]):
        assert first.end <= second.start
    for span in spans:
        assert span.start < span.end


def test_config_from_file():
    config = TokenizerConfig.from_file(fixture_path("tokenizer.rules"))
    assert "e.g." in config.abbreviations
    assert "Mrs." not in config.abbreviations
    assert surfaces("e.g. this", config) == ["e.g.", "this"]


def test_determinism():
    text = "Neither Mr. Holmes nor I, at www.example.org/x, slept."
    assert tokenize(text) == tokenize(text)


@given(st.text(alphabet=st.characters(min_codepoint=32, max_codepoint=126), max_size=60))
def test_tokens_partition_non_whitespace(text):
    spans = tokenize(text)
    rebuilt = []
    cursor = 0
    for span in spans:
        gap = text[cursor : span.start]
        assert gap.strip() == ""  # only whitespace may be skipped
        rebuilt.append(gap)
        assert text[span.start : span.end] == span.text
        rebuilt.append(span.text)
        cursor = span.end
    tail = text[cursor:]
    assert tail.strip() == ""
    rebuilt.append(tail)
    assert "".join(rebuilt) == text
