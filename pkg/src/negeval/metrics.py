"""Evaluation scores for negation resolution.

Two families of scope scores are provided on top of cue-based instance
alignment:

* token-level aggregation (``scope_tokens``), where the corpus-level
  precision denominator is the total number of predicted scope tokens, so
  long scopes dominate the score;
* instance-level aggregation (``instance_scores``), where each instance
  contributes one per-instance precision/recall score in [0, 1] weighted
  uniformly — the corpus score is the expected per-instance score.

With the exact-match per-instance scorer, instance-level aggregation
coincides with the "B" variant of the scope cue-match metric
(``scope_match`` with ``variant="b"``); with the token-overlap scorer it
differs from ``scope_tokens`` exactly by the uniform-vs-scope-length
instance weighting.

All scope-level scores require alignments built with exact cue matching.
Partial cue overlap is supported only for the legacy cue detection scores.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from typing import Callable, Sequence

from .alignment import CueMatchMode, InstanceAlignment
from .errors import AlignmentError, UsageError
from .model import Corpus, instance_signature

ElementSet = frozenset


def ratio_or(numerator: float, denominator: float, *, vacuous: bool) -> float:
    """Corpus-level ratio with the 0/0 convention.

    A zero denominator yields 1.0 when the opposing side is empty as well
    (``vacuous``: nothing to find, nothing predicted — perfect agreement)
    and 0.0 otherwise.
    """
    if denominator > 0:
        return numerator / denominator
    return 1.0 if vacuous else 0.0


def f1_score(precision: float, recall: float) -> float:
    if precision + recall == 0:
        return 0.0
    return 2 * precision * recall / (precision + recall)


def percent(ratio: float) -> float:
    """Percentage rounded half away from zero to one decimal (85.0, 86.7)."""
    return float(Decimal(repr(ratio * 100)).quantize(Decimal("0.1"), rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class PRF:
    """Precision/recall/F1 plus the counts they were computed from.

    The numerators are floats because instance-level scores sum fractional
    per-instance credits; for the strict metrics they are whole numbers.
    """

    precision: float
    recall: float
    f1: float
    p_num: float
    p_den: float
    r_num: float
    r_den: float

    @classmethod
    def from_counts(cls, p_num: float, p_den: float, r_num: float, r_den: float) -> "PRF":
        p = ratio_or(p_num, p_den, vacuous=r_den == 0)
        r = ratio_or(r_num, r_den, vacuous=p_den == 0)
        return cls(p, r, f1_score(p, r), p_num, p_den, r_num, r_den)

    def as_dict(self) -> dict:
        return {
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "percent": {
                "precision": percent(self.precision),
                "recall": percent(self.recall),
                "f1": percent(self.f1),
            },
            "counts": {
                "p_num": self.p_num,
                "p_den": self.p_den,
                "r_num": self.r_num,
                "r_den": self.r_den,
            },
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PRF":
        c = data["counts"]
        return cls(
            data["precision"], data["recall"], data["f1"], c["p_num"], c["p_den"], c["r_num"], c["r_den"]
        )


# ---------------------------------------------------------------------------
# Per-instance scope scorers


def token_overlap_scores(s_g: ElementSet, s_p: ElementSet) -> tuple[float, float]:
    """Per-instance token-overlap (precision, recall), each in [0, 1].

    precision = |s_g ∩ s_p| / |s_p| when the prediction is non-empty, else 1;
    recall    = |s_g ∩ s_p| / |s_g| when the gold scope is non-empty, else 1.
    The else-branches make an empty prediction against an empty gold scope a
    perfect per-instance result.
    """
    overlap = len(s_g & s_p)
    p = overlap / len(s_p) if s_p else 1.0
    r = overlap / len(s_g) if s_g else 1.0
    return (p, r)


def exact_match_scores(s_g: ElementSet, s_p: ElementSet) -> tuple[float, float]:
    """(1, 1) when the scope sets are identical, else (0, 0)."""
    return (1.0, 1.0) if s_g == s_p else (0.0, 0.0)


@dataclass(frozen=True)
class ScopeScorer:
    """A named pair of per-instance (precision, recall) scoring functions."""

    name: str
    score: Callable[[ElementSet, ElementSet], tuple[float, float]]


TOKEN_SCORER = ScopeScorer("token", token_overlap_scores)
EXACT_SCORER = ScopeScorer("exact", exact_match_scores)


# ---------------------------------------------------------------------------
# Corpus-level scores


def _require_exact(alignments: Sequence[InstanceAlignment], caller: str) -> None:
    for alignment in alignments:
        if alignment.mode is not CueMatchMode.EXACT:
            raise UsageError(f"{caller} requires alignments built with exact cue matching")


def _totals(alignments: Sequence[InstanceAlignment]) -> tuple[int, int]:
    return (
        sum(a.n_gold for a in alignments),
        sum(a.n_pred for a in alignments),
    )


def instance_scores(
    alignments: Sequence[InstanceAlignment],
    scorer: ScopeScorer = TOKEN_SCORER,
    n_gold: int | None = None,
    n_pred: int | None = None,
) -> PRF:
    """Uniformly weighted per-instance precision/recall expectation.

    Matched pairs contribute their per-instance scores; instances without a
    cue match contribute zero.  Precision divides by the number of predicted
    instances, recall by the number of gold instances.
    """
    _require_exact(alignments, "instance_scores")
    total_gold, total_pred = _totals(alignments)
    n_gold = total_gold if n_gold is None else n_gold
    n_pred = total_pred if n_pred is None else n_pred
    p_sum = 0.0
    r_sum = 0.0
    for alignment in alignments:
        for g, p in alignment.matched:
            p_score, r_score = scorer.score(g.scope, p.scope)
            p_sum += p_score
            r_sum += r_score
    return PRF.from_counts(p_sum, n_pred, r_sum, n_gold)


def scope_tokens(alignments: Sequence[InstanceAlignment]) -> PRF:
    """Scope token overlap aggregated over the whole corpus.

    The numerator sums |s_g ∩ s_p| over cue-matched pairs; the denominators
    are the total scope sizes over *all* predicted (gold) instances, matched
    or not.  A token belonging to several scopes counts once per scope.
    """
    _require_exact(alignments, "scope_tokens")
    overlap = 0
    pred_mass = 0
    gold_mass = 0
    for alignment in alignments:
        for g, p in alignment.matched:
            overlap += len(g.scope & p.scope)
            pred_mass += len(p.scope)
            gold_mass += len(g.scope)
        pred_mass += sum(len(p.scope) for p in alignment.unmatched_pred)
        gold_mass += sum(len(g.scope) for g in alignment.unmatched_gold)
    return PRF.from_counts(overlap, pred_mass, overlap, gold_mass)


def scope_match(alignments: Sequence[InstanceAlignment], variant: str = "standard") -> PRF:
    """Exact scope match over cue-matched pairs (the scope cue-match metric).

    Recall divides by the gold instance count in both variants.  The "b"
    variant divides precision by the number of predictions.  The "standard"
    variant reproduces the historical scoring quirk: predictions whose cue
    partially overlaps a gold cue, and cue-matched predictions with a wrong
    scope, are left out of the precision denominator entirely, so TP + FP
    can be smaller than the number of predictions.
    """
    _require_exact(alignments, "scope_match")
    _check_variant(variant)
    n_gold, n_pred = _totals(alignments)
    tp = 0
    full_fp = 0
    for alignment in alignments:
        tp += sum(1 for g, p in alignment.matched if g.scope == p.scope)
        partial = set(alignment.partial_only_pred)
        full_fp += sum(1 for p in alignment.unmatched_pred if p not in partial)
    if variant == "b":
        return PRF.from_counts(tp, n_pred, tp, n_gold)
    return PRF.from_counts(tp, tp + full_fp, tp, n_gold)


def cue_scores(
    alignments: Sequence[InstanceAlignment],
    mode: CueMatchMode = CueMatchMode.EXACT,
    variant: str = "standard",
) -> PRF:
    """Cue detection precision/recall at instance level.

    A matched pair is a true positive.  The "b" variant divides precision by
    the number of predictions; the "standard" variant counts as false
    positives only the predictions whose cue has no overlap with any gold
    cue.
    """
    _check_variant(variant)
    for alignment in alignments:
        if alignment.mode is not mode:
            raise UsageError(
                f"cue_scores: alignment for {alignment.doc_id}#{alignment.sent_index} was built "
                f"with {alignment.mode.value!r} cue matching, requested {mode.value!r}"
            )
    n_gold, n_pred = _totals(alignments)
    tp = sum(len(a.matched) for a in alignments)
    if variant == "b":
        return PRF.from_counts(tp, n_pred, tp, n_gold)
    no_overlap = 0
    for alignment in alignments:
        partial = set(alignment.partial_only_pred)
        no_overlap += sum(1 for p in alignment.unmatched_pred if p not in partial)
    return PRF.from_counts(tp, tp + no_overlap, tp, n_gold)


def _check_variant(variant: str) -> None:
    if variant not in ("standard", "b"):
        raise UsageError(f"unknown variant {variant!r}; expected 'standard' or 'b'")


@dataclass(frozen=True)
class SentenceAccuracy:
    """Share of fully correct sentences (cue and scope sets identical)."""

    correct: int
    total: int

    @property
    def ratio(self) -> float:
        return self.correct / self.total if self.total else 1.0


def correct_sentence_ratio(
    gold: Corpus, pred: Corpus, *, count_all_sentences: bool = False
) -> SentenceAccuracy:
    """Fraction of sentences whose predicted annotation equals gold exactly.

    By default the denominator counts only sentences with at least one gold
    instance; ``count_all_sentences`` switches to all sentences, which also
    penalises spurious predictions in negation-free sentences.  Events are
    ignored; instances compare as (cue set, scope set) multisets.
    """
    pred_by_key = {s.key: s for s in pred.sentences}
    missing = [s.key for s in gold.sentences if s.key not in pred_by_key]
    if missing:
        raise AlignmentError(f"sentences missing from predictions: {missing[:5]}")
    correct = 0
    total = 0
    for sent in gold.sentences:
        if not count_all_sentences and not sent.instances:
            continue
        total += 1
        gold_sig = Counter(map(instance_signature, sent.instances))
        pred_sig = Counter(map(instance_signature, pred_by_key[sent.key].instances))
        if gold_sig == pred_sig:
            correct += 1
    return SentenceAccuracy(correct, total)
