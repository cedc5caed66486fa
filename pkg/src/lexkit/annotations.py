"""Precision study machinery: annotation sampling, inter-rater agreement and
bootstrap-adjusted precision.

Relevance annotations re-estimate precision above the gold-list lower bound:
a retrieved word missing from the gold list may still belong to the topic,
and only human labels can say so.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from . import _kernels
from .errors import IncompleteAnnotations, NoData, UndefinedKappa
from .words import WordList, normalize_word

RELEVANT = "relevant"
IRRELEVANT = "irrelevant"
LABELS = (RELEVANT, IRRELEVANT)

FULL_LIST_THRESHOLD = 2000
DEFAULT_SAMPLE_SIZE = 300
DEFAULT_BOOTSTRAP_REPS = 10_000


@dataclass
class AnnotationSet:
    """Binary relevance labels, at least two raters per word.

    ``items`` maps each word to its (rater, label) pairs. A word is accepted
    when every rater called it relevant; pass ``rule="majority"`` for a
    majority vote with three or more raters.
    """

    items: dict[str, list[tuple[str, str]]] = field(default_factory=dict)

    def add(self, word: str, rater: str, label: str) -> None:
        if label not in LABELS:
            raise ValueError(f"label must be one of {LABELS}, got {label!r}")
        self.items.setdefault(normalize_word(word), []).append((rater, label))

    def words(self) -> tuple[str, ...]:
        return tuple(sorted(self.items))

    def __len__(self) -> int:
        return len(self.items)

    def accepted(self, rule: str = "unanimous") -> dict[str, bool]:
        """Per-word acceptance; requires >= 2 labels on every word."""
        if rule not in ("unanimous", "majority"):
            raise ValueError(f"unknown acceptance rule {rule!r}")
        out: dict[str, bool] = {}
        for word in self.words():
            labels = [label for _, label in self.items[word]]
            if len(labels) < 2:
                raise IncompleteAnnotations(
                    f"{word!r} has {len(labels)} label(s); need at least 2")
            relevant = sum(1 for label in labels if label == RELEVANT)
            if rule == "unanimous":
                out[word] = relevant == len(labels)
            else:
                out[word] = relevant * 2 > len(labels)
        return out

    def rater_labels(self, rater: str) -> dict[str, str]:
        out = {}
        for word, pairs in self.items.items():
            for r, label in pairs:
                if r == rater:
                    out[word] = label
        return out

    def raters(self) -> tuple[str, ...]:
        return tuple(sorted({r for pairs in self.items.values()
                             for r, _ in pairs}))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["word", "rater", "label"])
        for word in self.words():
            for rater, label in self.items[word]:
                writer.writerow([word, rater, label])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "AnnotationSet":
        annotations = cls()
        reader = csv.reader(io.StringIO(text))
        for row in reader:
            if not row or row == ["word", "rater", "label"]:
                continue
            if len(row) != 3:
                raise ValueError(f"expected word,rater,label row, got {row!r}")
            annotations.add(*row)
        return annotations

    def save(self, path) -> None:
        Path(path).write_text(self.to_csv(), encoding="utf-8")

    @classmethod
    def load(cls, path) -> "AnnotationSet":
        return cls.from_csv(Path(path).read_text(encoding="utf-8"))


def sample_for_annotation(lexicon: WordList, n: int = DEFAULT_SAMPLE_SIZE,
                          rng_seed: int = 0,
                          full_list_threshold: int = FULL_LIST_THRESHOLD) -> WordList:
    """Pick the words to hand to raters.

    Short lists are annotated in full; only lists beyond
    ``full_list_threshold`` words are subsampled to ``n`` uniformly without
    replacement.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if len(lexicon) <= n or len(lexicon) <= full_list_threshold:
        return lexicon
    rng = np.random.default_rng(rng_seed)
    idx = rng.choice(len(lexicon), size=n, replace=False)
    words = lexicon.words
    return WordList((words[i] for i in sorted(idx)),
                    name=f"{lexicon.name}-sample" if lexicon.name else "sample")


def cohen_kappa(a: Mapping[str, str] | Sequence[str],
                b: Mapping[str, str] | Sequence[str]) -> float:
    """Cohen's kappa: agreement beyond the chance implied by the marginals.

    ``a`` and ``b`` are two raters' labelings of the same items, either as
    word->label mappings (aligned on the shared keys, which must coincide) or
    as equal-length sequences.
    """
    if isinstance(a, Mapping) != isinstance(b, Mapping):
        raise ValueError("mix of mapping and sequence labelings")
    if isinstance(a, Mapping):
        if set(a) != set(b):
            raise ValueError("raters labelled different item sets")
        keys = sorted(a)
        xs = [a[k] for k in keys]
        ys = [b[k] for k in keys]
    else:
        if len(a) != len(b):
            raise ValueError("labelings differ in length")
        xs, ys = list(a), list(b)
    n = len(xs)
    if n == 0:
        raise NoData("no labelled items")
    observed = sum(1 for x, y in zip(xs, ys) if x == y) / n
    categories = set(xs) | set(ys)
    expected = sum((xs.count(c) / n) * (ys.count(c) / n) for c in categories)
    if expected == 1.0:
        raise UndefinedKappa("both raters are constant and identical")
    return (observed - expected) / (1.0 - expected)


def adjusted_precision(annotations: AnnotationSet,
                       bootstrap_reps: int = DEFAULT_BOOTSTRAP_REPS,
                       rng_seed: int = 0,
                       rule: str = "unanimous") -> tuple[float, tuple[float, float]]:
    """Share of annotated words the raters accepted, with a bootstrap CI.

    The 95% interval comes from the 2.5/97.5 percentiles of the acceptance
    rate over resamples (with replacement) of the annotated words.
    """
    if len(annotations) == 0:
        raise NoData("no annotated words")
    if bootstrap_reps < 1:
        raise ValueError("bootstrap_reps must be >= 1")
    accepted = annotations.accepted(rule=rule)
    flags = np.array([accepted[w] for w in annotations.words()],
                     dtype=np.float64)
    estimate = float(flags.mean())
    rng = np.random.default_rng(rng_seed)
    idx = rng.integers(0, len(flags), size=(bootstrap_reps, len(flags)))
    means = _kernels.bootstrap_means(flags, idx)
    lo, hi = np.percentile(means, [2.5, 97.5])
    return estimate, (float(lo), float(hi))
