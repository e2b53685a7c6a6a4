"""Punctuation baseline: gold cues, scope runs to the next punctuation mark.

For every gold instance the baseline keeps the cue unchanged and predicts as
scope the tokens strictly after the last cue token, stopping before the
first punctuation token (or the sentence end).  The cue itself is never part
of the predicted scope, and neither is any punctuation token.  With a
multiword or discontinuous cue the scan starts after its last token; with an
affix cue, after the token containing the affix.
"""

from __future__ import annotations

from dataclasses import replace

from .model import Corpus, NegationInstance, Sentence, element_for


def predict_sentence(sent: Sentence) -> Sentence:
    predicted = []
    for k, inst in enumerate(sent.instances):
        scope = []
        for token in sent.tokens[inst.last_cue_index() + 1 :]:
            if token.is_punct:
                break
            scope.append(element_for(token))
        predicted.append(NegationInstance(cue=inst.cue, scope=frozenset(scope), instance_id=k))
    return replace(sent, instances=tuple(predicted))


def punct_baseline(gold: Corpus) -> Corpus:
    """Predict a corpus from gold cues with the punctuation-bounded scopes."""
    return replace(gold, sentences=tuple(predict_sentence(s) for s in gold.sentences))
