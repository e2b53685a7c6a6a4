#!/usr/bin/env python3
"""Walkthrough: why token-level and instance-level scores rank systems
differently.

Three test sentences, two fictional systems.  System A nails the one long
scope but invents a scope where none exists and misses most of a short one.
System B gets the two short-scope sentences exactly right and recovers only
the core of the long one.  Token-level aggregation rewards A (long scopes
dominate the token mass); instance-level aggregation rewards B (every
negation counts the same).
"""

from negeval import full_report, parse_sem_conll

# *SEM-style CoNLL: doc  sent  tok  surface  lemma  pos  syntax  cue  scope  event
GOLD = """\
ex	0	0	If	if	IN	_	_	_	_
ex	0	1	not	not	RB	_	not	_	_
ex	0	2	,	,	,	_	_	_	_
ex	0	3	I	i	PRP	_	_	_	_
ex	0	4	'll	will	MD	_	_	_	_
ex	0	5	manage	manage	VB	_	_	_	_
ex	0	6	.	.	.	_	_	_	_

ex	1	0	He	he	PRP	_	_	He	_
ex	1	1	made	make	VBD	_	_	made	_
ex	1	2	no	no	DT	_	no	_	_
ex	1	3	remark	remark	NN	_	_	remark	remark
ex	1	4	.	.	.	_	_	_	_

ex	2	0	I	i	PRP	_	_	_	_
ex	2	1	see	see	VB	_	_	_	_
ex	2	2	nothing	nothing	NN	_	nothing	_	_
ex	2	3	why	why	WRB	_	_	why	_
ex	2	4	I	i	PRP	_	_	I	_
ex	2	5	should	should	MD	_	_	should	_
ex	2	6	interfere	interfere	VB	_	_	interfere	_
ex	2	7	in	in	IN	_	_	in	_
ex	2	8	the	the	DT	_	_	the	_
ex	2	9	matter	matter	NN	_	_	matter	_
ex	2	10	.	.	.	_	_	_	_
"""


def with_scopes(scopes_per_sentence):
    """Rewrite the gold scope columns: keep cues, swap in predicted scopes."""
    blocks = []
    for block, scope in zip(GOLD.strip().split("\n\n"), scopes_per_sentence):
        lines = []
        for line in block.split("\n"):
            cols = line.split("\t")
            index = int(cols[2])
            cols[8] = cols[3] if index in scope else "_"
            cols[9] = "_"
            lines.append("\t".join(cols))
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def main():
    gold = parse_sem_conll(GOLD, name="gold")

    # System A: invents a scope in (0), catches one token of (1), aces (2).
    system_a = parse_sem_conll(
        with_scopes([{0, 3, 4}, {3}, {3, 4, 5, 6, 7, 8, 9}]), name="system-a"
    )
    # System B: perfect on (0) and (1), recovers only the core of the long
    # scope and drags in one wrong token.
    system_b = parse_sem_conll(
        with_scopes([set(), {0, 1, 3}, {1, 3, 4}]), name="system-b"
    )

    for name, pred in (("System A", system_a), ("System B", system_b)):
        report = full_report(gold, pred)
        print(f"=== {name} ===")
        print(report.to_text())

    report_a = full_report(gold, system_a)
    report_b = full_report(gold, system_b)
    st = "token-level (ST)      "
    inst = "instance-level        "
    print(f"{st} A={report_a.metrics['st'].f1:.3f}  B={report_b.metrics['st'].f1:.3f}")
    print(f"{inst} A={report_a.metrics['inst_tok'].f1:.3f}  B={report_b.metrics['inst_tok'].f1:.3f}")
    print()
    print("Token-level scoring favours the system that wins the long scope;")
    print("instance-level scoring favours the one that resolves more negations.")


if __name__ == "__main__":
    main()
