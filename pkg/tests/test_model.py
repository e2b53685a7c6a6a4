from __future__ import annotations

import random

from hypothesis import given
from hypothesis import strategies as st

from negeval import (
    AnnotationElement,
    Corpus,
    NegationInstance,
    Sentence,
    Token,
    element_for,
    strip_punctuation,
    validate,
)
from negeval.testing import random_corpus


def make_sentence(surfaces, punct=(), instances=()):
    tokens = tuple(
        Token(i, s, None, None, is_punct=i in punct) for i, s in enumerate(surfaces)
    )
    return Sentence("d", 0, tokens, tuple(instances))


class TestElementEquality:
    def test_whole_token_equals_full_cover_subspan(self):
        token = Token(0, "remark")
        assert element_for(token) == element_for(token, (0, 6))
        assert hash(element_for(token)) == hash(element_for(token, (0, 6)))

    def test_subspan_equality_is_by_text(self):
        token = Token(3, "banana")
        a = element_for(token, (1, 3))  # "an"
        b = element_for(token, (3, 5))  # "an"
        assert a == b  # same token, same covered text

    def test_different_tokens_differ(self):
        assert element_for(Token(0, "no")) != element_for(Token(1, "no"))

    @given(st.text(min_size=1, max_size=8), st.integers(0, 7), st.integers(1, 8))
    def test_symmetric_and_consistent_with_hash(self, surface, start, length):
        end = start + length
        if end > len(surface):
            return
        token = Token(0, surface)
        a = element_for(token, (start, end))
        b = element_for(token, (start, end))
        assert a == b and b == a
        assert hash(a) == hash(b)

    def test_bad_subspan_rejected(self):
        token = Token(0, "cat")
        for span in ((0, 0), (2, 1), (0, 4), (-1, 2)):
            try:
                element_for(token, span)
            except ValueError:
                continue
            raise AssertionError(f"subspan {span} accepted")


class TestStripPunctuation:
    def test_removes_punct_elements_from_scope(self):
        sent = make_sentence(["He", "made", "remark", "."], punct={3})
        inst = NegationInstance(
            cue=frozenset({AnnotationElement(1)}),
            scope=frozenset({AnnotationElement(0), AnnotationElement(2), AnnotationElement(3)}),
        )
        stripped = strip_punctuation(Corpus((make_sentence(["He", "made", "remark", "."], punct={3}, instances=[inst]),)))
        got = stripped.sentences[0].instances[0]
        assert {e.token_index for e in got.scope} == {0, 2}
        # tokens untouched
        assert stripped.sentences[0].surfaces() == sent.surfaces()

    def test_identity_without_punctuation_in_sets(self):
        sent = make_sentence(["no", "thing"], instances=[
            NegationInstance(frozenset({AnnotationElement(0)}), frozenset({AnnotationElement(1)}))
        ])
        corpus = Corpus((sent,))
        assert strip_punctuation(corpus) == corpus

    def test_drops_instance_with_all_punct_cue(self):
        inst_punct = NegationInstance(cue=frozenset({AnnotationElement(1)}))
        inst_ok = NegationInstance(cue=frozenset({AnnotationElement(0)}), instance_id=1)
        sent = make_sentence(["no", "!"], punct={1}, instances=[inst_punct, inst_ok])
        stripped = strip_punctuation(Corpus((sent,)))
        instances = stripped.sentences[0].instances
        assert len(instances) == 1
        assert {e.token_index for e in instances[0].cue} == {0}
        assert instances[0].instance_id == 0  # renumbered

    def test_idempotent_on_random_corpora(self):
        for seed in range(50):
            corpus = random_corpus(random.Random(seed))
            once = strip_punctuation(corpus)
            assert strip_punctuation(once) == once

    def test_preserves_order_and_ids(self):
        for seed in range(50):
            corpus = random_corpus(random.Random(seed))
            stripped = strip_punctuation(corpus)
            assert [s.key for s in stripped.sentences] == [s.key for s in corpus.sentences]
            for sent in stripped.sentences:
                assert [i.instance_id for i in sent.instances] == list(range(len(sent.instances)))


class TestValidate:
    def test_well_formed_corpus_is_clean(self):
        sent = make_sentence(["no", "scope"], instances=[
            NegationInstance(frozenset({AnnotationElement(0)}), frozenset({AnnotationElement(1)}))
        ])
        assert validate(Corpus((sent,))) == []

    def test_out_of_range_element(self):
        sent = make_sentence(["a", "b", "c", "d", "e"], instances=[
            NegationInstance(frozenset({AnnotationElement(99)}))
        ])
        diags = validate(Corpus((sent,)))
        assert any(d.code == "index-out-of-range" and d.level == "error" for d in diags)

    def test_shared_cue_is_a_warning(self):
        shared = AnnotationElement(0)
        sent = make_sentence(["no", "b"], instances=[
            NegationInstance(frozenset({shared})),
            NegationInstance(frozenset({shared, AnnotationElement(1)}), instance_id=1),
        ])
        diags = validate(Corpus((sent,)))
        assert [d.code for d in diags] == ["overlapping-cues"]
        assert diags[0].level == "warning"

    def test_empty_cue_is_an_error(self):
        sent = make_sentence(["a"], instances=[NegationInstance(cue=frozenset())])
        diags = validate(Corpus((sent,)))
        assert any(d.code == "empty-cue" for d in diags)

    def test_duplicate_sentence_key(self):
        sent = make_sentence(["a"])
        diags = validate(Corpus((sent, sent)))
        assert any(d.code == "duplicate-sentence" for d in diags)
