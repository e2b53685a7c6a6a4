#!/usr/bin/env python3
"""Walkthrough: splits, statistics, and the coordination re-annotation flow.

A "neither ... nor" negation annotated as one multiword cue semantically
asserts two negations.  The detector drafts a patch splitting the cue into
one instance per conjunct (both inheriting the original scope); a human
reviews the draft file; applying it rewrites the corpus.
"""

import random

from negeval import (
    SplitSpec,
    apply_patches,
    corpus_stats,
    detect_coordination_cues,
    format_patch_file,
    parse_patch_file,
    punct_baseline,
    split_corpus,
    full_report,
)
from negeval.testing import random_corpus

from negeval import parse_sem_conll

COORD = """\
story	0	0	Neither	neither	DT	_	Neither	_	_
story	0	1	Mary	mary	NNP	_	_	Mary	_
story	0	2	nor	nor	CC	_	nor	_	_
story	0	3	Sam	sam	NNP	_	_	Sam	_
story	0	4	like	like	VBP	_	_	like	_
story	0	5	pizza	pizza	NN	_	_	pizza	_
story	0	6	.	.	.	_	_	_	_

story	1	0	He	he	PRP	_	_	He	_
story	1	1	made	make	VBD	_	_	made	_
story	1	2	no	no	DT	_	no	_	_
story	1	3	remark	remark	NN	_	_	remark	_
story	1	4	.	.	.	_	_	_	_
"""


def main():
    corpus = parse_sem_conll(COORD, name="story")

    print("=== before re-annotation ===")
    print(corpus_stats(corpus).to_tsv())

    drafts = detect_coordination_cues(corpus)
    print(f"{len(drafts)} coordination candidate(s); draft patch file for review:")
    print(format_patch_file(corpus, drafts))

    # After review the (possibly edited) file is parsed back and applied.
    reviewed = parse_patch_file(format_patch_file(corpus, drafts), corpus)
    patched = apply_patches(corpus, reviewed)
    print("=== after re-annotation ===")
    print(corpus_stats(patched).to_tsv())

    # Document-level splitting is deterministic in the seed.
    big = random_corpus(random.Random(0), max_sentences=60, n_docs=10)
    train, dev, test = split_corpus(big, SplitSpec(ratios=(80, 10, 10), seed=7))
    print("split sizes:", len(train), len(dev), len(test), "of", len(big))
    again = split_corpus(big, SplitSpec(ratios=(80, 10, 10), seed=7))
    print("same seed, same split:", (train, dev, test) == again)
    print()

    # The punctuation baseline gives a floor for scope scores: gold cues,
    # scope up to the next punctuation mark.
    baseline = punct_baseline(corpus)
    report = full_report(corpus, baseline)
    print("punctuation baseline against its own gold:")
    print(report.to_text())


if __name__ == "__main__":
    main()
