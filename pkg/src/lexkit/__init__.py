"""lexkit: grow seed word lists into thematic lexica and evaluate them.

Expansion backends: a multilingual colexification network built from
bilingual dictionaries, word-word synonym graphs, and pretrained word
embeddings (per-seed cosine threshold or seed-centroid retrieval). The
evaluation harness scores expansions against gold lexica with
precision/recall/F1, length-matched null baselines, annotation-based
adjusted precision, and a dictionary-based text scorer.
"""

from .annotations import (AnnotationSet, adjusted_precision, cohen_kappa,
                          sample_for_annotation)
from .colex import (BilingualDictionary, ColexGraph, build_colex_graph,
                    expand_colex, load_bilingual_dictionary,
                    load_colex_bundle, save_colex_bundle, translate_labels)
from .embeddings import (EmbeddingSpace, cosine, expand_centroid,
                         expand_threshold, load_embeddings)
from .errors import (DegenerateVector, EmptyDocument, IncompleteAnnotations,
                     InfeasibleSample, InvalidPattern, InvalidWord,
                     LanguageUnavailable, LexkitError, NoData, NotExpandable,
                     ParseError, UndefinedCorrelation, UndefinedKappa)
from .evaluation import (Confusion, EvalReport, ExperimentConfig, Metrics,
                         baseline_null, combine, confusion, coverage, prf,
                         random_seed_experiment, summarize_reports)
from .scoring import (Document, correlate, doc_score, load_corpus,
                      score_corpus, tokenize)
from .synonyms import (SynonymGraph, expand_synonym, load_synonym_graph,
                       save_synonym_graph)
from .words import (Expansion, WildcardPattern, WordList, expand_wildcards,
                    load_pattern_list, load_word_list, normalize_word,
                    parse_pattern, save_word_list)

__version__ = "0.1.0"

__all__ = [
    "AnnotationSet", "BilingualDictionary", "ColexGraph", "Confusion",
    "DegenerateVector", "Document", "EmbeddingSpace", "EmptyDocument",
    "EvalReport", "Expansion", "ExperimentConfig", "IncompleteAnnotations",
    "InfeasibleSample", "InvalidPattern", "InvalidWord",
    "LanguageUnavailable", "LexkitError", "Metrics", "NoData",
    "NotExpandable", "ParseError", "SynonymGraph", "UndefinedCorrelation",
    "UndefinedKappa", "WildcardPattern", "WordList", "adjusted_precision",
    "baseline_null", "build_colex_graph", "cohen_kappa", "combine",
    "confusion", "correlate", "cosine", "coverage", "doc_score",
    "expand_centroid", "expand_colex", "expand_synonym", "expand_threshold",
    "expand_wildcards", "load_bilingual_dictionary", "load_colex_bundle",
    "load_corpus", "load_embeddings", "load_pattern_list", "load_synonym_graph",
    "load_word_list", "normalize_word", "parse_pattern", "prf",
    "random_seed_experiment", "sample_for_annotation", "save_colex_bundle",
    "save_synonym_graph", "save_word_list", "score_corpus",
    "summarize_reports", "tokenize", "translate_labels",
]
