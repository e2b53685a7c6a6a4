#!/usr/bin/env python3
"""Walkthrough: negation instances as labeled dependency graphs.

Cue tokens hang off an artificial root (CUE); scope and event tokens attach
to cue representatives (S, E).  With one scope embedded in another, the
direct encoding links every token of the inner scope to both cues, while
the nested encoding keeps a single link from the outer cue to the inner cue
and lets decoding expand it back.
"""

from negeval import parse_sem_conll
from negeval.depgraph import EncodingKind, decode, encode, format_graph

# "... there is no reason why I should not be perfectly frank ." with the
# inner negation ("not ...") embedded in the outer one ("no ...").
NESTED = """\
demo	0	0	...	...	:	_	_	_	_	_	_	_
demo	0	1	there	there	EX	_	_	there	_	_	_	_
demo	0	2	is	be	VBZ	_	_	is	_	_	_	_
demo	0	3	no	no	DT	_	no	_	_	_	_	_
demo	0	4	reason	reason	NN	_	_	_	reason	_	_	_
demo	0	5	why	why	WRB	_	_	why	_	_	why	_
demo	0	6	I	i	PRP	_	_	I	_	_	I	_
demo	0	7	should	should	MD	_	_	should	_	_	should	_
demo	0	8	not	not	RB	_	_	not	_	not	_	_
demo	0	9	be	be	VB	_	_	be	_	_	be	_
demo	0	10	perfectly	perfectly	RB	_	_	perfectly	_	_	perfectly	_
demo	0	11	frank	frank	JJ	_	_	frank	_	_	frank	_
demo	0	12	.	.	.	_	_	_	_	_	_	_
"""


def main():
    sentence = parse_sem_conll(NESTED).sentences[0]
    print("sentence:", " ".join(t.surface for t in sentence.tokens))
    print()
    for kind in EncodingKind:
        graph = encode(sentence, kind)
        print(f"=== {kind.value} encoding ({len(graph.edges)} edges) ===")
        print(format_graph(sentence, graph))
        recovered = decode(graph, kind)
        same = {(i.cue, i.scope, i.event) for i in recovered} == {
            (i.cue, i.scope, i.event) for i in sentence.instances
        }
        print(f"decode(encode(sentence)) == sentence: {same}")
        print()

    direct = encode(sentence, EncodingKind.DIRECT)
    nested = encode(sentence, EncodingKind.NESTED)
    shared = len(direct.edges) - len(nested.edges)
    print(f"The nested encoding saves {shared} S edges on this sentence: the")
    print("inner scope's tokens are attached once instead of once per cue.")


if __name__ == "__main__":
    main()
