"""Evaluation protocol: seed sampling, confusion metrics, null baselines,
method combination and coverage accounting.

The central experiment takes a gold word list, draws random seed subsets,
expands them, and scores the expansion against the gold list. True positives
are retrieved words that the gold list confirms; seeds are excluded from the
retrieval side because they were given, not found. The companion null model
draws length-matched uniform samples from the method's candidate universe to
quantify chance performance.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import InfeasibleSample, NoData, NotExpandable
from .words import Expansion, WordList

# Stream tags keep the per-repetition, baseline-seed and baseline-sampling
# random streams disjoint under one rng_seed.
_STREAM_REPETITION = 0
_STREAM_BASELINE = 1


@dataclass(frozen=True)
class Confusion:
    """Word-level confusion between a gold list and the retrieved words W."""

    tp_words: WordList
    fp_words: WordList
    fn_words: WordList

    @property
    def tp(self) -> int:
        return len(self.tp_words)

    @property
    def fp(self) -> int:
        return len(self.fp_words)

    @property
    def fn(self) -> int:
        return len(self.fn_words)


@dataclass(frozen=True)
class Metrics:
    precision: float
    recall: float
    f1: float

    def as_dict(self) -> dict:
        return {"precision": self.precision, "recall": self.recall,
                "f1": self.f1}


def confusion(original: WordList, seeds: WordList, expanded: WordList,
              strict_fn: bool = False) -> Confusion:
    """Compare the expansion with the gold list over W = expanded \\ seeds.

    TP = original ∩ W, FP = W \\ original, FN = original \\ (W ∪ seeds).
    Seeds are left out of FN because they were supplied, not retrieved;
    ``strict_fn=True`` switches to the literal FN = original \\ W, which
    counts unretrieved seeds as misses.
    """
    if not seeds.as_set() <= original.as_set():
        warnings.warn(
            f"{len(seeds.as_set() - original.as_set())} seed word(s) are "
            "not in the gold list; they still count as given, not retrieved",
            stacklevel=2)
    retrieved = expanded.without(seeds)
    original_set = original.as_set()
    tp = [w for w in retrieved if w in original_set]
    fp = [w for w in retrieved if w not in original_set]
    retrieved_set = retrieved.as_set()
    if strict_fn:
        fn = [w for w in original if w not in retrieved_set]
    else:
        seed_set = seeds.as_set()
        fn = [w for w in original
              if w not in retrieved_set and w not in seed_set]
    return Confusion(tp_words=WordList(tp), fp_words=WordList(fp),
                     fn_words=WordList(fn))


def prf(c: Confusion) -> Metrics:
    """Precision, recall, F1 with the zero-denominator-gives-zero convention."""
    precision = c.tp / (c.tp + c.fp) if (c.tp + c.fp) else 0.0
    recall = c.tp / (c.tp + c.fn) if (c.tp + c.fn) else 0.0
    f1 = (2 * precision * recall / (precision + recall)
          if (precision + recall) else 0.0)
    return Metrics(precision=precision, recall=recall, f1=f1)


@dataclass(frozen=True)
class ExperimentConfig:
    """Knobs of one random-seed experiment.

    Either ``seed_fraction`` (random subsets, ``repetitions`` times) or
    ``seed_list`` (a fixed expert selection, one repetition) must be given.
    """

    method: str = ""
    seed_fraction: float | None = None
    seed_list: WordList | None = None
    repetitions: int = 50
    rng_seed: int = 0
    baseline_repetitions: int = 1000
    strict_fn: bool = False

    def __post_init__(self):
        if (self.seed_fraction is None) == (self.seed_list is None):
            raise ValueError("give exactly one of seed_fraction or seed_list")
        if self.seed_fraction is not None and not (0.0 < self.seed_fraction < 1.0):
            raise ValueError("seed_fraction must be in (0, 1)")
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")
        if self.rng_seed < 0:
            raise ValueError("rng_seed must be non-negative")
        if self.baseline_repetitions < 1:
            raise ValueError("baseline_repetitions must be >= 1")


@dataclass(frozen=True)
class RepetitionRecord:
    index: int
    n_seeds: int
    n_unmatched: int
    expandable: bool
    expanded_size: int
    new_size: int
    precision: float | None
    recall: float | None
    f1: float | None

    def as_dict(self) -> dict:
        return {
            "index": self.index, "n_seeds": self.n_seeds,
            "n_unmatched": self.n_unmatched, "expandable": self.expandable,
            "expanded_size": self.expanded_size, "new_size": self.new_size,
            "precision": self.precision, "recall": self.recall, "f1": self.f1,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "RepetitionRecord":
        return cls(**d)


@dataclass
class EvalReport:
    """Per-repetition traces plus recomputable aggregates and baselines."""

    config: dict
    records: list[RepetitionRecord]
    aggregates: dict = field(default_factory=dict)
    baseline: dict | None = None

    def __post_init__(self):
        if not self.aggregates:
            self.aggregates = compute_aggregates(self.records)

    @property
    def expandable_any(self) -> bool:
        return any(r.expandable for r in self.records)

    def to_dict(self) -> dict:
        return {
            "config": self.config,
            "records": [r.as_dict() for r in self.records],
            "aggregates": self.aggregates,
            "baseline": self.baseline,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "EvalReport":
        return cls(config=d["config"],
                   records=[RepetitionRecord.from_dict(r) for r in d["records"]],
                   aggregates=d["aggregates"], baseline=d.get("baseline"))

    @classmethod
    def from_json(cls, text: str) -> "EvalReport":
        return cls.from_dict(json.loads(text))


def _mean_sd(values: Sequence[float]) -> tuple[float | None, float | None]:
    if not values:
        return None, None
    arr = np.asarray(values, dtype=np.float64)
    mean = float(arr.mean())
    sd = float(arr.std(ddof=1)) if len(arr) > 1 else 0.0
    return mean, sd


def compute_aggregates(records: Sequence[RepetitionRecord]) -> dict:
    """Means and SDs over the expandable repetitions; recomputable from the
    per-repetition traces at any time."""
    usable = [r for r in records if r.expandable]
    p_mean, p_sd = _mean_sd([r.precision for r in usable])
    r_mean, r_sd = _mean_sd([r.recall for r in usable])
    f_mean, f_sd = _mean_sd([r.f1 for r in usable])
    size_mean, _ = _mean_sd([float(r.expanded_size) for r in usable])
    new_mean, _ = _mean_sd([float(r.new_size) for r in usable])
    return {
        "n_repetitions": len(records),
        "n_expandable": len(usable),
        "expandable_fraction": (len(usable) / len(records)) if records else 0.0,
        "precision_mean": p_mean, "precision_sd": p_sd,
        "recall_mean": r_mean, "recall_sd": r_sd,
        "f1_mean": f_mean, "f1_sd": f_sd,
        "expanded_size_mean": size_mean,
        "new_size_mean": new_mean,
    }


def seed_count(n_original: int, fraction: float) -> int:
    """Ceiling, so even 10% of a short list yields at least one seed."""
    return max(1, math.ceil(fraction * n_original))


def draw_seeds(original: WordList, n_seeds: int,
               rng: np.random.Generator, name: str = "seeds") -> WordList:
    """Uniform sample without replacement, kept in original-list order."""
    idx = rng.choice(len(original), size=n_seeds, replace=False)
    words = original.words
    return WordList((words[i] for i in sorted(idx)), name=name)


def random_seed_experiment(original: WordList,
                           expander: Callable[[WordList], Expansion],
                           cfg: ExperimentConfig,
                           universe: WordList | None = None) -> EvalReport:
    """Run the seed-sampling protocol and aggregate the results.

    Each repetition draws its seeds from a counter-offset random stream
    (``[rng_seed, 0, k]``), so repetition k is reproducible in isolation and
    repetitions may run in any order. Non-expandable repetitions are skipped
    in the metric means but kept in the traces for coverage accounting.
    With ``universe`` given, a null baseline matched to the mean expanded
    size is attached to the report.
    """
    if len(original) == 0:
        raise NoData("empty gold word list")
    if cfg.seed_list is not None:
        reps = 1
        n_seeds = len(cfg.seed_list)
        if n_seeds == 0:
            raise NoData("empty explicit seed list")
    else:
        reps = cfg.repetitions
        n_seeds = seed_count(len(original), cfg.seed_fraction)

    records: list[RepetitionRecord] = []
    for k in range(reps):
        if cfg.seed_list is not None:
            seeds = cfg.seed_list
        else:
            rng = np.random.default_rng([cfg.rng_seed, _STREAM_REPETITION, k])
            seeds = draw_seeds(original, n_seeds, rng)
        try:
            expansion = expander(seeds)
            expandable = expansion.expandable
            n_unmatched = len(expansion.unmatched)
            expanded = expansion.expanded
        except NotExpandable:
            expandable = False
            n_unmatched = len(seeds)
            expanded = seeds
        if expandable:
            metrics = prf(confusion(original, seeds, expanded,
                                    strict_fn=cfg.strict_fn))
            precision, recall, f1 = (metrics.precision, metrics.recall,
                                     metrics.f1)
        else:
            precision = recall = f1 = None
        records.append(RepetitionRecord(
            index=k, n_seeds=len(seeds), n_unmatched=n_unmatched,
            expandable=expandable, expanded_size=len(expanded),
            new_size=len(expanded) - len(seeds),
            precision=precision, recall=recall, f1=f1))

    aggregates = compute_aggregates(records)
    config_echo = {
        "method": cfg.method,
        "original_name": original.name,
        "n_original": len(original),
        "seed_fraction": cfg.seed_fraction,
        "explicit_seeds": cfg.seed_list is not None,
        "n_seeds": n_seeds,
        "repetitions": reps,
        "rng_seed": cfg.rng_seed,
        "baseline_repetitions": cfg.baseline_repetitions,
        "strict_fn": cfg.strict_fn,
    }
    report = EvalReport(config=config_echo, records=records,
                        aggregates=aggregates)
    if universe is not None and aggregates["n_expandable"] > 0:
        report.baseline = _attach_baseline(original, cfg, n_seeds,
                                           aggregates, universe)
    return report


def _attach_baseline(original, cfg, n_seeds, aggregates, universe):
    """Null model matched to the mean expanded-lexicon size."""
    if cfg.seed_list is not None:
        seeds = cfg.seed_list
    else:
        rng = np.random.default_rng([cfg.rng_seed, _STREAM_BASELINE, 0])
        seeds = draw_seeds(original, n_seeds, rng)
    pool_size = len(universe.without(seeds))
    target = int(round(aggregates["expanded_size_mean"]))
    clipped = target > pool_size
    if clipped:
        target = pool_size
    metrics = baseline_null(
        universe, target, original, seeds,
        reps=cfg.baseline_repetitions,
        rng=np.random.default_rng([cfg.rng_seed, _STREAM_BASELINE, 1]))
    out = metrics.as_dict()
    out.update({"target_size": target, "clipped": clipped,
                "repetitions": cfg.baseline_repetitions,
                "universe_size": len(universe)})
    return out


def baseline_null(universe: WordList, target_size: int, original: WordList,
                  seeds: WordList, reps: int = 1000,
                  rng: int | np.random.Generator = 0) -> Metrics:
    """Mean metrics of length-matched uniform samples from the universe.

    Samples are drawn from the universe minus the seeds and each sample is
    scored as if it were the retrieved word set W.
    """
    if isinstance(rng, np.random.Generator):
        generator = rng
    else:
        generator = np.random.default_rng(rng)
    pool = universe.without(seeds)
    if target_size < 1:
        raise ValueError("target_size must be >= 1")
    if target_size > len(pool):
        raise InfeasibleSample(
            f"cannot draw {target_size} distinct words from a universe of "
            f"{len(pool)} (after removing seeds)")
    if reps < 1:
        raise ValueError("reps must be >= 1")
    original_set = original.as_set()
    flags = np.fromiter((w in original_set for w in pool),
                        dtype=bool, count=len(pool))
    gold_outside_seeds = len(original.as_set() - seeds.as_set())
    p_sum = r_sum = f_sum = 0.0
    for _ in range(reps):
        idx = generator.choice(len(pool), size=target_size, replace=False)
        tp = int(flags[idx].sum())
        p = tp / target_size
        r = tp / gold_outside_seeds if gold_outside_seeds else 0.0
        f = 2 * p * r / (p + r) if (p + r) else 0.0
        p_sum += p
        r_sum += r
        f_sum += f
    return Metrics(precision=p_sum / reps, recall=r_sum / reps,
                   f1=f_sum / reps)


def combine(lexica: Sequence[WordList], mode: str,
            seeds: WordList | None = None) -> WordList:
    """Union or intersection of expansions, computed over their W-parts.

    Seeds are stripped before the set operation and re-attached after, so an
    intersection is not trivially non-empty just because every expansion
    carries the seeds.
    """
    if len(lexica) < 2:
        raise ValueError("combine needs at least two lexica")
    if mode not in ("union", "intersection"):
        raise ValueError(f"unknown combine mode {mode!r}")
    seed_set = seeds.as_set() if seeds is not None else frozenset()
    parts = [lex.as_set() - seed_set for lex in lexica]
    if mode == "union":
        merged = set().union(*parts)
    else:
        merged = set.intersection(*map(set, parts))
    base = seeds if seeds is not None else WordList(name=mode)
    return base.union(sorted(merged), name=mode)


def coverage(reports: Iterable[EvalReport]) -> float:
    """Fraction of gold lists expandable in at least one repetition."""
    reports = list(reports)
    if not reports:
        return 0.0
    return sum(1 for r in reports if r.expandable_any) / len(reports)


def summarize_reports(reports: Sequence[EvalReport]) -> dict:
    """Cross-list summary in both aggregations.

    ``by_list`` averages each list's own mean first (every gold list counts
    once); ``pooled`` pools every expandable repetition. Both are reported
    because table captions rarely say which one they used.
    """
    per_list = [r.aggregates for r in reports if r.aggregates["n_expandable"]]
    pooled_records = [rec for r in reports for rec in r.records
                      if rec.expandable]

    def _avg(values):
        return float(np.mean(values)) if values else None

    by_list = {
        "precision_mean": _avg([a["precision_mean"] for a in per_list]),
        "recall_mean": _avg([a["recall_mean"] for a in per_list]),
        "f1_mean": _avg([a["f1_mean"] for a in per_list]),
        "expanded_size_mean": _avg([a["expanded_size_mean"] for a in per_list]),
    }
    pooled = {
        "precision_mean": _avg([rec.precision for rec in pooled_records]),
        "recall_mean": _avg([rec.recall for rec in pooled_records]),
        "f1_mean": _avg([rec.f1 for rec in pooled_records]),
        "expanded_size_mean": _avg([float(rec.expanded_size)
                                    for rec in pooled_records]),
    }
    return {"n_lists": len(reports), "coverage": coverage(reports),
            "by_list": by_list, "pooled": pooled}


CSV_COLUMNS = (
    "method", "list", "seed_fraction", "n_seeds", "repetitions",
    "n_expandable", "precision_mean", "precision_sd", "recall_mean",
    "recall_sd", "f1_mean", "f1_sd", "baseline_precision", "baseline_recall",
    "baseline_f1", "mean_size",
)


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def reports_to_csv(reports: Sequence[EvalReport]) -> str:
    """Summary table with one row per report, paper-style columns."""
    lines = [",".join(CSV_COLUMNS)]
    for r in reports:
        agg, base = r.aggregates, (r.baseline or {})
        row = (
            r.config.get("method", ""), r.config.get("original_name", ""),
            r.config.get("seed_fraction"), r.config.get("n_seeds"),
            agg["n_repetitions"], agg["n_expandable"],
            agg["precision_mean"], agg["precision_sd"],
            agg["recall_mean"], agg["recall_sd"],
            agg["f1_mean"], agg["f1_sd"],
            base.get("precision"), base.get("recall"), base.get("f1"),
            agg["expanded_size_mean"],
        )
        lines.append(",".join(_csv_cell(v) for v in row))
    return "\n".join(lines) + "\n"
