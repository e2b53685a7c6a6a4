"""negeval: negation resolution corpora, alignment, and evaluation metrics.

The package parses negation-annotated corpora (CoNLL, BioScope XML, SFU
Review XML) into one instance-based model, aligns gold and predicted
instances on their cues, and computes the span- and instance-level scores
used to evaluate negation resolution systems, together with a punctuation
baseline, dependency-graph encodings of the annotations, and dataset
utilities (splits, statistics, re-annotation patches).
"""

from .alignment import CueMatchMode, InstanceAlignment, align, align_corpus
from .baseline import punct_baseline
from .bioscope import load_bioscope, parse_bioscope
from .conll import dump_sem_conll, load_sem_conll, parse_sem_conll, write_sem_conll
from .datatools import (
    CorpusStats,
    ReannotationPatch,
    SplitSpec,
    apply_patches,
    corpus_stats,
    detect_coordination_cues,
    format_patch_file,
    parse_patch_file,
    split_corpus,
)
from .depgraph import EncodingKind, NegDepGraph, decode, encode
from .errors import (
    AlignmentError,
    GraphError,
    NegevalError,
    ParseError,
    PatchError,
    SplitError,
    UsageError,
)
from .metrics import (
    EXACT_SCORER,
    PRF,
    TOKEN_SCORER,
    ScopeScorer,
    correct_sentence_ratio,
    cue_scores,
    exact_match_scores,
    instance_scores,
    percent,
    scope_match,
    scope_tokens,
    token_overlap_scores,
)
from .model import (
    AnnotationElement,
    Corpus,
    Diagnostic,
    NegationInstance,
    Sentence,
    Token,
    element_for,
    strip_punctuation,
    validate,
)
from .report import MetricReport, full_report
from .sfu import load_sfu, parse_sfu
from .tokenizer import CharSpan, TokenizerConfig, tokenize

__version__ = "0.1.0"

__all__ = [
    "AlignmentError",
    "AnnotationElement",
    "CharSpan",
    "Corpus",
    "CorpusStats",
    "CueMatchMode",
    "Diagnostic",
    "EncodingKind",
    "EXACT_SCORER",
    "GraphError",
    "InstanceAlignment",
    "MetricReport",
    "NegDepGraph",
    "NegationInstance",
    "NegevalError",
    "PRF",
    "ParseError",
    "PatchError",
    "ReannotationPatch",
    "ScopeScorer",
    "Sentence",
    "SplitError",
    "SplitSpec",
    "Token",
    "TOKEN_SCORER",
    "TokenizerConfig",
    "UsageError",
    "align",
    "align_corpus",
    "apply_patches",
    "corpus_stats",
    "correct_sentence_ratio",
    "cue_scores",
    "decode",
    "detect_coordination_cues",
    "dump_sem_conll",
    "element_for",
    "encode",
    "exact_match_scores",
    "format_patch_file",
    "full_report",
    "instance_scores",
    "load_bioscope",
    "load_sem_conll",
    "load_sfu",
    "parse_bioscope",
    "parse_patch_file",
    "parse_sem_conll",
    "parse_sfu",
    "percent",
    "punct_baseline",
    "scope_match",
    "scope_tokens",
    "split_corpus",
    "strip_punctuation",
    "token_overlap_scores",
    "tokenize",
    "validate",
    "write_sem_conll",
]
