#!/usr/bin/env python3
"""Walkthrough: the three corpus formats and the unified instance model.

The same negation can arrive as pre-tokenized CoNLL columns, as BioScope
character-offset XML (untokenized, cue inside the scope), or as SFU
word-level XML (cue outside the scope, possibly discontinuous).  All three
readers produce the same kind of object: sentences with (cue, scope) sets
over token indices.
"""

from negeval import (
    parse_bioscope,
    parse_sem_conll,
    parse_sfu,
    strip_punctuation,
    tokenize,
    write_sem_conll,
)

CONLL = """\
demo	0	0	It	it	PRP	_	_	It	_
demo	0	1	was	be	VBD	_	_	was	_
demo	0	2	imprecise	imprecise	JJ	_	im	precise	_
demo	0	3	.	.	.	_	_	_	_
"""

BIOSCOPE = """\
<Document><DocumentID>abstract-7</DocumentID>
<sentence id="S1">There was <xcope id="X1"><cue type="negation" ref="X1">no</cue> sign of growth</xcope>.</sentence>
</Document>
"""

SFU = """\
<DOCUMENT><PARAGRAPH><SENTENCE>
<xcope ID="1"><W>The</W><W>battery</W></xcope>
<cue type="negation" ID="1"><W>never</W></cue>
<xcope ID="1"><W>lasted</W></xcope>
<W>a</W><W>day</W><W>.</W>
</SENTENCE></PARAGRAPH></DOCUMENT>
"""


def show(corpus, title):
    print(f"=== {title} ===")
    for sent in corpus.sentences:
        print(" tokens:", " ".join(t.surface for t in sent.tokens))
        for inst in sent.instances:
            cue = sorted((e.token_index, e.text or sent.tokens[e.token_index].surface) for e in inst.cue)
            scope = sorted(e.token_index for e in inst.scope)
            print(f"  cue {cue}  scope tokens {scope}")
    print()


def main():
    # CoNLL: the affix cue "im" is a sub-token element of "imprecise",
    # and the rest of the word ("precise") sits in the scope.
    conll = parse_sem_conll(CONLL, name="demo-conll")
    show(conll, "CoNLL with an affix cue")

    # BioScope: untokenized text, so markup offsets run through the
    # tokenizer; the cue is part of its own scope by annotation design.
    bio = parse_bioscope(BIOSCOPE)
    show(bio, "BioScope (cue inside scope)")
    bio_norm = parse_bioscope(BIOSCOPE, remove_cue_from_scope=True)
    show(bio_norm, "BioScope, normalized for cross-corpus comparison")

    # SFU: pre-tokenized words, discontinuous scope fragments share an ID.
    sfu = parse_sfu(SFU, name="review-42")
    show(sfu, "SFU review (discontinuous scope)")

    # The tokenizer keeps URLs whole and records character offsets.
    spans = tokenize("Flagged at http://example.org/x, sadly.")
    print("tokenizer:", [(s.text, s.start, s.end) for s in spans])
    print()

    # Everything converts to CoNLL, the only format this package writes.
    print("BioScope sentence rendered as CoNLL (punctuation stripped):")
    print(write_sem_conll(strip_punctuation(bio)))


if __name__ == "__main__":
    main()
