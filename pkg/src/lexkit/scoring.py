"""Dictionary-based text scoring and correlation against a reference lexicon.

Each document is scored by the relative frequency of lexicon words among its
tokens (stop words included, nothing filtered). Two score series over the
same documents are compared with Pearson's r and a document-level bootstrap
confidence interval; Spearman is available behind a flag since the right
coefficient is an open choice.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import _kernels
from .errors import EmptyDocument, ParseError, UndefinedCorrelation
from .words import WordList

# Maximal runs of unicode letters; digits and underscores split tokens.
_TOKEN_RE = re.compile(r"[^\W\d_]+", re.UNICODE)

DEFAULT_BOOTSTRAP_REPS = 1000

ScoreSeries = dict[str, float]


def tokenize(text: str) -> list[str]:
    """Lowercased letter runs; punctuation and digits are boundaries."""
    return _TOKEN_RE.findall(text.lower())


@dataclass(frozen=True)
class Document:
    """A text with its derived token list."""

    id: str
    text: str
    tokens: tuple[str, ...]

    @classmethod
    def from_text(cls, doc_id: str, text: str) -> "Document":
        return cls(id=doc_id, text=text, tokens=tuple(tokenize(text)))


def doc_score(doc: Document, lexicon: WordList, relative: bool = True) -> float:
    """Lexicon hits per token (or the raw hit count with relative=False)."""
    if not doc.tokens:
        raise EmptyDocument(f"document {doc.id!r} has no tokens")
    hits = sum(1 for t in doc.tokens if t in lexicon)
    return hits / len(doc.tokens) if relative else float(hits)


def score_corpus(docs: list[Document], lexicon: WordList,
                 relative: bool = True) -> ScoreSeries:
    """Independent per-document scores, keyed by document id."""
    return {doc.id: doc_score(doc, lexicon, relative=relative) for doc in docs}


def _rankdata(values: np.ndarray) -> np.ndarray:
    """Average ranks (1-based), ties share the mean rank."""
    order = np.argsort(values, kind="stable")
    ranks = np.empty(len(values), dtype=np.float64)
    i = 0
    while i < len(values):
        j = i
        while j + 1 < len(values) and values[order[j + 1]] == values[order[i]]:
            j += 1
        ranks[order[i:j + 1]] = (i + j) / 2.0 + 1.0
        i = j + 1
    return ranks


def pearson_r(x: np.ndarray, y: np.ndarray) -> float:
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    dx = x - x.mean()
    dy = y - y.mean()
    denom = np.sqrt((dx * dx).sum() * (dy * dy).sum())
    if denom == 0.0:
        raise UndefinedCorrelation("a score series is constant")
    return float((dx * dy).sum() / denom)


def correlate(a: ScoreSeries, b: ScoreSeries,
              bootstrap_reps: int = DEFAULT_BOOTSTRAP_REPS,
              rng_seed: int = 0,
              coefficient: str = "pearson") -> tuple[float, tuple[float, float]]:
    """Correlation between two per-document score series.

    The series must cover the same documents (>= 3) and neither may be
    constant. The CI resamples documents with replacement; resamples that
    turn out constant carry no correlation and are dropped.
    """
    if coefficient not in ("pearson", "spearman"):
        raise ValueError(f"unknown coefficient {coefficient!r}")
    if set(a) != set(b):
        raise ValueError("score series cover different documents")
    ids = sorted(a)
    if len(ids) < 3:
        raise ValueError("need at least 3 documents to correlate")
    x = np.array([a[i] for i in ids], dtype=np.float64)
    y = np.array([b[i] for i in ids], dtype=np.float64)
    if coefficient == "spearman":
        x = _rankdata(x)
        y = _rankdata(y)
    r = pearson_r(x, y)

    rng = np.random.default_rng(rng_seed)
    idx = rng.integers(0, len(ids), size=(bootstrap_reps, len(ids)))
    if coefficient == "spearman":
        resampled = np.empty(bootstrap_reps, dtype=np.float64)
        for k in range(bootstrap_reps):
            xv = x[idx[k]]
            yv = y[idx[k]]
            if np.all(xv == xv[0]) or np.all(yv == yv[0]):
                resampled[k] = np.nan
                continue
            resampled[k] = pearson_r(_rankdata(xv), _rankdata(yv))
    else:
        resampled = _kernels.bootstrap_pearson(x, y, idx)
    valid = resampled[~np.isnan(resampled)]
    if len(valid) == 0:
        return r, (float("nan"), float("nan"))
    lo, hi = np.percentile(valid, [2.5, 97.5])
    return r, (float(lo), float(hi))


def load_corpus(path) -> list[Document]:
    """Read documents from a JSON-lines file or a directory of .txt files.

    JSONL rows carry ``{"id": ..., "text": ...}``; in directory mode the
    file stem is the id. Order is line order or sorted file name.
    """
    path = Path(path)
    docs: list[Document] = []
    if path.is_dir():
        for txt in sorted(path.glob("*.txt")):
            docs.append(Document.from_text(txt.stem,
                                           txt.read_text(encoding="utf-8")))
        return docs
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                row = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(str(exc), path=str(path), line=lineno) from exc
            if not isinstance(row, dict) or "id" not in row or "text" not in row:
                raise ParseError("expected an object with 'id' and 'text'",
                                 path=str(path), line=lineno)
            docs.append(Document.from_text(str(row["id"]), str(row["text"])))
    return docs


def scores_to_csv(series: ScoreSeries) -> str:
    lines = ["id,score"]
    lines.extend(f"{doc_id},{score!r}" for doc_id, score in
                 sorted(series.items()))
    return "\n".join(lines) + "\n"


def correlation_report(r: float, ci: tuple[float, float], n_documents: int,
                       coefficient: str, bootstrap_reps: int,
                       rng_seed: int) -> dict:
    return {
        "coefficient": coefficient,
        "r": r,
        "ci95": [ci[0], ci[1]],
        "n_documents": n_documents,
        "bootstrap_reps": bootstrap_reps,
        "rng_seed": rng_seed,
    }
