"""Dataset utilities: document-level splits, corpus statistics, patches.

Splitting works at document granularity.  Documents are ordered by a stable
keyed hash of (seed, doc_id) and assigned greedily to whichever part is
furthest below its target sentence share, so re-running with the same seed
always reproduces the same split and adding a document perturbs the others
minimally.  An explicit assignment file (``doc_id<TAB>part``) overrides the
hash for the documents it lists, which is how published splits are
reproduced.

Re-annotation patches replace one instance of one sentence with a list of
new instances.  The patch file is line-oriented, one block per patch::

    target<TAB>doc_id<TAB>sent_index<TAB>instance_id
    replace<TAB>cue/scope/event cells, three per token (CoNLL cell syntax)
    replace<TAB>...

Blocks are separated by blank lines; ``#`` starts a comment line.
"""

from __future__ import annotations

import hashlib
from collections import Counter
from dataclasses import dataclass, field, replace

from .conll import cell_element  # shared annotation-cell semantics
from .errors import ParseError, PatchError, SplitError
from .model import (
    AnnotationElement,
    Corpus,
    NegationInstance,
    Sentence,
    strip_punctuation,
)

PARTS = ("train", "dev", "test")


@dataclass(frozen=True)
class SplitSpec:
    ratios: tuple[int, int, int] = (80, 10, 10)
    seed: int = 0
    assignment: dict[str, str] | None = None

    def __post_init__(self):
        if sum(self.ratios) != 100:
            raise SplitError(f"split ratios must sum to 100, got {self.ratios}")
        if self.assignment:
            for doc_id, part in self.assignment.items():
                if part not in PARTS:
                    raise SplitError(f"unknown split part {part!r} for document {doc_id!r}")


def parse_assignment(text: str) -> dict[str, str]:
    """Parse a ``doc_id<TAB>part`` assignment file."""
    assignment = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t") if "\t" in line else line.split()
        if len(parts) != 2:
            raise SplitError(f"line {lineno}: expected 'doc_id<TAB>part', got {raw!r}")
        assignment[parts[0]] = parts[1]
    return assignment


def _doc_hash(seed: int, doc_id: str) -> int:
    digest = hashlib.blake2b(f"{seed}:{doc_id}".encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def split_corpus(corpus: Corpus, spec: SplitSpec | None = None) -> tuple[Corpus, Corpus, Corpus]:
    """Partition a corpus into (train, dev, test) by document."""
    spec = spec or SplitSpec()
    doc_sentences: dict[str, list[Sentence]] = {}
    for sent in corpus.sentences:
        doc_sentences.setdefault(sent.doc_id, []).append(sent)

    assigned: dict[str, str] = {}
    if spec.assignment:
        unknown = sorted(set(spec.assignment) - set(doc_sentences))
        if unknown:
            raise SplitError(f"assignment file names unknown documents: {unknown[:5]}")
        assigned.update(spec.assignment)

    remaining = [d for d in doc_sentences if d not in assigned]
    remaining.sort(key=lambda d: (_doc_hash(spec.seed, d), d))
    total = len(corpus.sentences)
    counts = Counter({part: 0 for part in PARTS})
    for doc_id, part in assigned.items():
        counts[part] += len(doc_sentences[doc_id])
    targets = {part: total * ratio / 100 for part, ratio in zip(PARTS, spec.ratios)}
    for doc_id in remaining:
        part = max(PARTS, key=lambda p: targets[p] - counts[p])
        assigned[doc_id] = part
        counts[part] += len(doc_sentences[doc_id])

    buckets: dict[str, list[Sentence]] = {part: [] for part in PARTS}
    for sent in corpus.sentences:  # keep corpus order within each part
        buckets[assigned[sent.doc_id]].append(sent)
    return tuple(
        Corpus(tuple(buckets[part]), name=f"{corpus.name}:{part}" if corpus.name else part)
        for part in PARTS
    )


@dataclass(frozen=True)
class CorpusStats:
    sentences: int
    negation_sentences: int
    instances: int
    scope_length_histogram: dict[int, int] = field(default_factory=dict)

    @property
    def negation_sentence_pct(self) -> float:
        return 100.0 * self.negation_sentences / self.sentences if self.sentences else 0.0

    def to_tsv(self) -> str:
        lines = [
            f"sentences\t{self.sentences}",
            f"negation_sentences\t{self.negation_sentences}",
            f"negation_sentence_pct\t{self.negation_sentence_pct:.1f}",
            f"instances\t{self.instances}",
        ]
        for length in sorted(self.scope_length_histogram):
            lines.append(f"scope_length\t{length}\t{self.scope_length_histogram[length]}")
        return "\n".join(lines) + "\n"


def corpus_stats(corpus: Corpus) -> CorpusStats:
    """Sentence/instance counts and the scope-length histogram.

    Scope lengths are measured after punctuation stripping, matching how the
    evaluation sees the data.
    """
    stripped = strip_punctuation(corpus)
    histogram: Counter[int] = Counter()
    instances = 0
    negation_sentences = 0
    for sent in stripped.sentences:
        if sent.instances:
            negation_sentences += 1
        for inst in sent.instances:
            instances += 1
            histogram[len(inst.scope)] += 1
    return CorpusStats(
        sentences=len(stripped.sentences),
        negation_sentences=negation_sentences,
        instances=instances,
        scope_length_histogram=dict(histogram),
    )


# ---------------------------------------------------------------------------
# Re-annotation patches


@dataclass(frozen=True)
class ReannotationPatch:
    doc_id: str
    sent_index: int
    instance_id: int
    replacement: tuple[NegationInstance, ...]

    @property
    def target(self) -> tuple[str, int, int]:
        return (self.doc_id, self.sent_index, self.instance_id)


def apply_patches(corpus: Corpus, patches: list[ReannotationPatch]) -> Corpus:
    """Replace targeted instances; instance ids are renumbered per sentence.

    Raises :class:`PatchError` when a target does not exist.  Patches with
    distinct targets commute.
    """
    by_sentence: dict[tuple[str, int], dict[int, ReannotationPatch]] = {}
    for patch in patches:
        slot = by_sentence.setdefault((patch.doc_id, patch.sent_index), {})
        if patch.instance_id in slot:
            raise PatchError(f"two patches target instance {patch.target}")
        slot[patch.instance_id] = patch

    sentence_keys = {s.key for s in corpus.sentences}
    for key, slot in by_sentence.items():
        if key not in sentence_keys:
            raise PatchError(f"patch targets unknown sentence {key[0]}#{key[1]}")

    out = []
    for sent in corpus.sentences:
        slot = by_sentence.get(sent.key)
        if not slot:
            out.append(sent)
            continue
        known = {inst.instance_id for inst in sent.instances}
        for instance_id in slot:
            if instance_id not in known:
                raise PatchError(
                    f"patch targets unknown instance {sent.doc_id}#{sent.sent_index}/{instance_id}"
                )
        rebuilt: list[NegationInstance] = []
        for inst in sent.instances:
            if inst.instance_id in slot:
                rebuilt.extend(slot[inst.instance_id].replacement)
            else:
                rebuilt.append(inst)
        renumbered = tuple(replace(i, instance_id=n) for n, i in enumerate(rebuilt))
        out.append(replace(sent, instances=renumbered))
    return replace(corpus, sentences=tuple(out))


def parse_patch_file(text: str, corpus: Corpus, source: str = "<string>") -> list[ReannotationPatch]:
    """Parse the patch format and bind the replacement cells to ``corpus``."""
    sentences = {s.key: s for s in corpus.sentences}
    patches: list[ReannotationPatch] = []
    target: tuple[str, int, int] | None = None
    replacements: list[NegationInstance] = []
    target_line = 0

    def flush() -> None:
        nonlocal target, replacements
        if target is None:
            return
        if not replacements:
            raise ParseError("patch block without replace lines", source, target_line)
        patches.append(
            ReannotationPatch(target[0], target[1], target[2], tuple(replacements))
        )
        target, replacements = None, []

    for lineno, raw in enumerate(text.split("\n"), 1):
        line = raw.rstrip("\r")
        if not line.strip():
            flush()
            continue
        if line.lstrip().startswith("#"):
            continue
        cols = line.split("\t")
        if cols[0] == "target":
            flush()
            if len(cols) != 4:
                raise ParseError("target line needs doc_id, sent_index, instance_id", source, lineno)
            try:
                target = (cols[1], int(cols[2]), int(cols[3]))
            except ValueError:
                raise ParseError("sent_index and instance_id must be integers", source, lineno) from None
            target_line = lineno
            if (target[0], target[1]) not in sentences:
                raise ParseError(f"unknown sentence {target[0]}#{target[1]}", source, lineno)
        elif cols[0] == "replace":
            if target is None:
                raise ParseError("replace line before any target line", source, lineno)
            sent = sentences[(target[0], target[1])]
            cells = cols[1:]
            if len(cells) != 3 * len(sent.tokens):
                raise ParseError(
                    f"expected {3 * len(sent.tokens)} cells (3 per token), found {len(cells)}",
                    source,
                    lineno,
                )
            replacements.append(_instance_from_cells(cells, sent, source, lineno))
        else:
            raise ParseError(f"unknown patch directive {cols[0]!r}", source, lineno)
    flush()
    return patches


def _instance_from_cells(cells: list[str], sent: Sentence, source: str, lineno: int) -> NegationInstance:
    cue: set[AnnotationElement] = set()
    scope: set[AnnotationElement] = set()
    event: set[AnnotationElement] = set()
    for token in sent.tokens:
        for cell, bucket in zip(cells[3 * token.index : 3 * token.index + 3], (cue, scope, event)):
            if cell != "_":
                bucket.add(cell_element(cell, token, source, lineno))
    return NegationInstance(frozenset(cue), frozenset(scope), frozenset(event))


def format_patch_file(corpus: Corpus, patches: list[ReannotationPatch]) -> str:
    """Render patches in the line-oriented patch format."""
    sentences = {s.key: s for s in corpus.sentences}
    blocks = []
    for patch in patches:
        sent = sentences.get((patch.doc_id, patch.sent_index))
        if sent is None:
            raise PatchError(f"patch targets unknown sentence {patch.doc_id}#{patch.sent_index}")
        lines = [f"target\t{patch.doc_id}\t{patch.sent_index}\t{patch.instance_id}"]
        for inst in patch.replacement:
            cells = []
            for token in sent.tokens:
                for elements in (inst.cue, inst.scope, inst.event):
                    match = [e for e in elements if e.token_index == token.index]
                    cells.append(match[0].effective_text(token) if match else "_")
            lines.append("replace\t" + "\t".join(cells))
        blocks.append("\n".join(lines))
    return ("\n\n".join(blocks) + "\n") if blocks else ""


DEFAULT_COORDINATION_LEXICON = frozenset({"neither", "nor"})


def detect_coordination_cues(
    corpus: Corpus, lexicon: frozenset[str] = DEFAULT_COORDINATION_LEXICON
) -> list[ReannotationPatch]:
    """Draft patches splitting discontinuous coordination cues.

    Flags instances whose cue is discontinuous and built entirely from the
    coordination lexicon ("neither ... nor"), and proposes one instance per
    cue word, each inheriting the full original scope (and event).  The
    drafts are meant for human review — they are never applied automatically.
    """
    patches = []
    for sent in corpus.sentences:
        for inst in sent.instances:
            indices = sorted(e.token_index for e in inst.cue)
            if len(indices) < 2 or indices[-1] - indices[0] + 1 == len(indices):
                continue
            surfaces = [e.effective_text(sent.tokens[e.token_index]).lower() for e in inst.cue]
            if not all(s in lexicon for s in surfaces):
                continue
            split = tuple(
                NegationInstance(cue=frozenset({e}), scope=inst.scope, event=inst.event)
                for e in sorted(inst.cue, key=lambda e: e.token_index)
            )
            patches.append(
                ReannotationPatch(sent.doc_id, sent.sent_index, inst.instance_id, split)
            )
    return patches
