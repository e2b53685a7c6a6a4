"""Unified in-memory model for negation-annotated corpora.

A corpus is a sequence of sentences; each sentence carries its tokens and a
list of negation instances.  An instance is a set of cue elements plus a set
of scope elements (and optionally event elements).  An element points at a
token and may cover only a sub-token character range, which is how affix
cues ("im" in "imprecise") are represented.

All types are immutable after construction and hashable, so they can be
shared freely and processed in parallel.
"""

from __future__ import annotations

import logging
import unicodedata
from dataclasses import dataclass, field, replace
from typing import Iterable, Iterator

logger = logging.getLogger(__name__)

#: POS tags treated as punctuation by default (PTB-style tags used by the
#: CoNLL negation data, plus the UD "PUNCT" tag).
DEFAULT_PUNCT_POS = frozenset(
    {",", ".", ":", "``", "''", "`", "'", "(", ")", "-LRB-", "-RRB-", "HYPH", "NFP", "PUNCT"}
)


def is_punct_surface(surface: str) -> bool:
    """True when every character of ``surface`` is Unicode punctuation."""
    return bool(surface) and all(unicodedata.category(ch).startswith("P") for ch in surface)


def detect_punct(surface: str, pos: str | None, punct_pos: frozenset[str] = DEFAULT_PUNCT_POS) -> bool:
    """Decide whether a token is punctuation.

    With a POS tag available the decision is by tag membership; without one
    (XML corpora carry no tags) it falls back to the Unicode character
    categories of the surface form.
    """
    if pos is not None:
        return pos in punct_pos
    return is_punct_surface(surface)


@dataclass(frozen=True)
class Token:
    """One token of a sentence.  ``index`` is the 0-based sentence position."""

    index: int
    surface: str
    lemma: str | None = None
    pos: str | None = None
    is_punct: bool = False


@dataclass(frozen=True)
class AnnotationElement:
    """A cue/scope/event constituent: a token, or a character range within one.

    ``text`` is ``None`` for a whole-token element and the covered substring
    otherwise.  Equality and hashing use ``(token_index, text)`` only, so a
    whole-token element equals a sub-span element covering the full surface
    (``element_for`` normalises that case away at construction time), and two
    sub-spans with identical text within the same token compare equal.
    ``subspan`` is kept for provenance but excluded from comparisons.
    """

    token_index: int
    text: str | None = None
    subspan: tuple[int, int] | None = field(default=None, compare=False)

    def covers_whole_token(self) -> bool:
        return self.text is None

    def effective_text(self, token: Token) -> str:
        """The surface text this element denotes within ``token``."""
        return token.surface if self.text is None else self.text


def element_for(token: Token, subspan: tuple[int, int] | None = None) -> AnnotationElement:
    """Build an element for ``token``, normalising full-surface sub-spans.

    Raises ``ValueError`` when the sub-span does not satisfy
    ``0 <= start < end <= len(surface)``.
    """
    if subspan is None:
        return AnnotationElement(token.index)
    start, end = subspan
    if not (0 <= start < end <= len(token.surface)):
        raise ValueError(
            f"subspan {subspan!r} out of bounds for token {token.surface!r} (index {token.index})"
        )
    if start == 0 and end == len(token.surface):
        return AnnotationElement(token.index)
    return AnnotationElement(token.index, token.surface[start:end], (start, end))


@dataclass(frozen=True)
class NegationInstance:
    """One negation: a non-empty cue set, a scope set, and optional events.

    The scope may be empty ("If not, ..." has a cue without any scope).
    ``instance_id`` is the ordinal of the instance within its sentence.
    """

    cue: frozenset[AnnotationElement]
    scope: frozenset[AnnotationElement] = frozenset()
    event: frozenset[AnnotationElement] = frozenset()
    instance_id: int = 0

    def first_cue_index(self) -> int:
        """Token index of the linearly first cue element (-1 if cue is empty)."""
        return min((e.token_index for e in self.cue), default=-1)

    def last_cue_index(self) -> int:
        return max((e.token_index for e in self.cue), default=-1)


@dataclass(frozen=True)
class Sentence:
    doc_id: str
    sent_index: int
    tokens: tuple[Token, ...]
    instances: tuple[NegationInstance, ...] = ()

    @property
    def key(self) -> tuple[str, int]:
        return (self.doc_id, self.sent_index)

    def surfaces(self) -> tuple[str, ...]:
        return tuple(t.surface for t in self.tokens)

    def token_of(self, element: AnnotationElement) -> Token:
        return self.tokens[element.token_index]


@dataclass(frozen=True)
class Corpus:
    sentences: tuple[Sentence, ...] = ()
    name: str = ""

    def __iter__(self) -> Iterator[Sentence]:
        return iter(self.sentences)

    def __len__(self) -> int:
        return len(self.sentences)


@dataclass(frozen=True)
class Diagnostic:
    """One machine-readable validation finding."""

    level: str  # "error" or "warning"
    code: str
    message: str
    doc_id: str | None = None
    sent_index: int | None = None
    instance_id: int | None = None

    def __str__(self) -> str:
        where = ""
        if self.doc_id is not None:
            where = f" at {self.doc_id}#{self.sent_index}"
            if self.instance_id is not None:
                where += f"/instance {self.instance_id}"
        return f"{self.level}[{self.code}]{where}: {self.message}"


def _renumber(instances: Iterable[NegationInstance]) -> tuple[NegationInstance, ...]:
    return tuple(replace(inst, instance_id=i) for i, inst in enumerate(instances))


def strip_punctuation(corpus: Corpus) -> Corpus:
    """Remove punctuation tokens from every cue/scope/event set.

    Tokens themselves are kept (indices never change); only the annotation
    sets shrink.  An instance whose cue consists solely of punctuation is
    dropped with a warning, since it cannot take part in cue matching.
    Idempotent.
    """
    out_sentences = []
    for sent in corpus.sentences:
        punct = {t.index for t in sent.tokens if t.is_punct}
        if not punct:
            out_sentences.append(sent)
            continue
        kept: list[NegationInstance] = []
        for inst in sent.instances:
            cue = frozenset(e for e in inst.cue if e.token_index not in punct)
            if not cue:
                logger.warning(
                    "dropping instance %d of %s#%d: cue is entirely punctuation",
                    inst.instance_id,
                    sent.doc_id,
                    sent.sent_index,
                )
                continue
            scope = frozenset(e for e in inst.scope if e.token_index not in punct)
            event = frozenset(e for e in inst.event if e.token_index not in punct)
            kept.append(replace(inst, cue=cue, scope=scope, event=event))
        out_sentences.append(replace(sent, instances=_renumber(kept)))
    return replace(corpus, sentences=tuple(out_sentences))


def validate(corpus: Corpus) -> list[Diagnostic]:
    """Check every model invariant and return the violations found.

    Errors: empty surfaces, non-contiguous token indices, out-of-range or
    out-of-bounds elements, empty cue sets, duplicate sentence keys.
    Warnings: cue sets shared between instances of one sentence (evaluation
    still proceeds on such data).
    """
    diags: list[Diagnostic] = []
    seen_keys: set[tuple[str, int]] = set()
    for sent in corpus.sentences:
        if sent.key in seen_keys:
            diags.append(
                Diagnostic("error", "duplicate-sentence", f"duplicate sentence key {sent.key}", *sent.key)
            )
        seen_keys.add(sent.key)
        for pos, token in enumerate(sent.tokens):
            if token.index != pos:
                diags.append(
                    Diagnostic(
                        "error",
                        "bad-token-index",
                        f"token {pos} carries index {token.index}",
                        *sent.key,
                    )
                )
            if not token.surface:
                diags.append(
                    Diagnostic("error", "empty-surface", f"token {pos} has empty surface", *sent.key)
                )
        n = len(sent.tokens)
        for inst in sent.instances:
            if not inst.cue:
                diags.append(
                    Diagnostic("error", "empty-cue", "instance has no cue elements", *sent.key, inst.instance_id)
                )
            for element in (*inst.cue, *inst.scope, *inst.event):
                if not 0 <= element.token_index < n:
                    diags.append(
                        Diagnostic(
                            "error",
                            "index-out-of-range",
                            f"element references token {element.token_index} in a {n}-token sentence",
                            *sent.key,
                            inst.instance_id,
                        )
                    )
                    continue
                if element.subspan is not None:
                    start, end = element.subspan
                    surface = sent.tokens[element.token_index].surface
                    if not (0 <= start < end <= len(surface)):
                        diags.append(
                            Diagnostic(
                                "error",
                                "bad-subspan",
                                f"subspan {element.subspan} out of bounds for {surface!r}",
                                *sent.key,
                                inst.instance_id,
                            )
                        )
        for i, a in enumerate(sent.instances):
            for b in sent.instances[i + 1 :]:
                if a.cue & b.cue:
                    diags.append(
                        Diagnostic(
                            "warning",
                            "overlapping-cues",
                            f"instances {a.instance_id} and {b.instance_id} share cue elements",
                            *sent.key,
                            a.instance_id,
                        )
                    )
    return diags


def instance_signature(inst: NegationInstance) -> tuple[frozenset, frozenset]:
    """(cue, scope) pair used wherever instances are compared as annotations."""
    return (inst.cue, inst.scope)
