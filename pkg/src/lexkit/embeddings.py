"""Pretrained word vectors restricted to a frequency-ranked vocabulary, with
per-seed threshold expansion and centroid expansion.

The vector file format is the common textual one: an optional ``count dim``
header line, then ``word v1 ... vd`` per line. Vectors are stored exactly as
given (no re-normalization); cosine handles the norms. The candidate scan
runs through the kernels in :mod:`lexkit._kernels`, so it picks up the numba
backend when available.
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Iterable

import numpy as np

from . import _kernels
from .errors import DegenerateVector, NoData, NotExpandable, ParseError
from .words import Expansion, WordList, normalize_word

DEFAULT_TOP_N = 25_000
DEFAULT_TAU = 0.5

# FrequencyRanking is just a word list ordered most-frequent-first; load it
# with words.load_word_list.
FrequencyRanking = WordList


class EmbeddingSpace:
    """Vocabulary plus a |V| x d float64 matrix, one row per word.

    Row order follows the frequency ranking used at load time; expansion
    results are sorted by word, so they do not depend on it.
    """

    __slots__ = ("words", "matrix", "dim", "_index", "_norms")

    def __init__(self, words: Iterable[str], matrix: np.ndarray):
        self.words = tuple(words)
        self.matrix = np.asarray(matrix, dtype=np.float64)
        if self.matrix.ndim != 2 or self.matrix.shape[0] != len(self.words):
            raise ValueError("matrix must be |V| x d")
        self.dim = self.matrix.shape[1]
        self._index = {w: i for i, w in enumerate(self.words)}
        self._norms = None

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word: object) -> bool:
        return word in self._index

    def row(self, word: str) -> int:
        return self._index[word]

    def vector(self, word: str) -> np.ndarray:
        return self.matrix[self._index[word]]

    @property
    def norms(self) -> np.ndarray:
        if self._norms is None:
            self._norms = np.linalg.norm(self.matrix, axis=1)
        return self._norms


def _parse_vec_line(fields, dim, path, lineno):
    if len(fields) != dim + 1:
        raise ParseError(f"expected {dim} components, got {len(fields) - 1}",
                         path=str(path), line=lineno)
    try:
        values = [float(x) for x in fields[1:]]
    except ValueError as exc:
        raise ParseError(str(exc), path=str(path), line=lineno) from exc
    if not all(math.isfinite(v) for v in values):
        raise ParseError("non-finite vector component",
                         path=str(path), line=lineno)
    return values


def load_embeddings(vec_file, ranking: WordList,
                    top_n: int = DEFAULT_TOP_N) -> EmbeddingSpace:
    """Load vectors for the intersection of the file vocabulary and the
    ``top_n`` most frequent words of ``ranking``.

    The first line is treated as a ``count dim`` header when it consists of
    exactly two integers. On case-collisions after normalization the first
    occurrence in the file wins.
    """
    if top_n < 1:
        raise ValueError("top_n must be >= 1")
    allowed = list(ranking)[:top_n]
    allowed_set = set(allowed)
    vectors: dict[str, list[float]] = {}
    dim = None
    path = Path(vec_file)
    with open(path, encoding="utf-8") as fh:
        first = fh.readline()
        lineno = 1
        fields = first.split()
        is_header = len(fields) == 2 and all(
            f.lstrip("+-").isdigit() for f in fields)
        if is_header:
            dim = int(fields[1])
        elif fields:
            if dim is None:
                dim = len(fields) - 1
                if dim < 1:
                    raise ParseError("no vector components on first line",
                                     path=str(path), line=lineno)
            word = normalize_word(fields[0])
            values = _parse_vec_line(fields, dim, path, lineno)
            if word in allowed_set and word not in vectors:
                vectors[word] = values
        for line in fh:
            lineno += 1
            fields = line.split()
            if not fields:
                continue
            if dim is None:
                dim = len(fields) - 1
                if dim < 1:
                    raise ParseError("no vector components",
                                     path=str(path), line=lineno)
            word = normalize_word(fields[0])
            values = _parse_vec_line(fields, dim, path, lineno)
            if word in allowed_set and word not in vectors:
                vectors[word] = values
    kept = [w for w in allowed if w in vectors]
    if not kept:
        raise NoData(
            f"no overlap between {path} and the top {top_n} ranked words")
    matrix = np.array([vectors[w] for w in kept], dtype=np.float64)
    return EmbeddingSpace(kept, matrix)


def cosine(u, v) -> float:
    """u.v / (|u||v|), clipped into [-1, 1] against rounding.

    Computed as dot / sqrt(ss_u * ss_v) so identical vectors score exactly 1.
    """
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    ssu = float(np.dot(u, u))
    ssv = float(np.dot(v, v))
    if ssu == 0.0 or ssv == 0.0:
        raise DegenerateVector("cosine with a zero vector")
    return float(min(1.0, max(-1.0, float(np.dot(u, v)) / math.sqrt(ssu * ssv))))


def _split_seeds(space: EmbeddingSpace, seeds: WordList):
    """Seeds usable as queries (in vocabulary, nonzero norm) vs unmatched."""
    matched, unmatched = [], []
    for seed in seeds:
        if seed in space and space.norms[space.row(seed)] > 0.0:
            matched.append(seed)
        else:
            unmatched.append(seed)
    return matched, unmatched


def _check_tau(tau: float) -> None:
    if not (0.0 < tau <= 1.0):
        raise ValueError(f"tau must be in (0, 1], got {tau}")


def expand_threshold(space: EmbeddingSpace, seeds: WordList,
                     tau: float = DEFAULT_TAU) -> Expansion:
    """W = every vocabulary word with cosine >= tau to at least one seed.

    Out-of-vocabulary seeds are skipped, not errors; the list counts as
    expandable iff at least one seed is in the space.
    """
    _check_tau(tau)
    matched, unmatched = _split_seeds(space, seeds)
    if not matched:
        return Expansion(seeds=seeds, expanded=seeds,
                         unmatched=WordList(unmatched, name=seeds.name))
    rows = [space.row(s) for s in matched]
    queries = space.matrix[rows]
    qnorms = space.norms[rows]
    best = _kernels.max_cosine(space.matrix, space.norms, queries, qnorms)
    seed_set = seeds.as_set()
    new_words = sorted(
        w for w, sim in zip(space.words, best)
        if sim >= tau and w not in seed_set)
    expanded = seeds.union(new_words, name=seeds.name)
    return Expansion(seeds=seeds, expanded=expanded,
                     unmatched=WordList(unmatched, name=seeds.name))


def expand_centroid(space: EmbeddingSpace, seeds: WordList,
                    tau: float = DEFAULT_TAU) -> Expansion:
    """W = every vocabulary word with cosine >= tau to the summed seed vector.

    With a single seed this coincides with expand_threshold on that seed,
    since cosine ignores scale. Seeds that cancel out exactly leave no
    direction to search along, hence DegenerateVector.
    """
    _check_tau(tau)
    matched, unmatched = _split_seeds(space, seeds)
    if not matched:
        raise NotExpandable("no seed word is in the embedding vocabulary")
    centroid = space.matrix[[space.row(s) for s in matched]].sum(axis=0)
    cnorm = float(np.linalg.norm(centroid))
    if cnorm == 0.0:
        raise DegenerateVector("seed vectors sum to zero")
    sims = _kernels.cosine_to_query(space.matrix, space.norms, centroid, cnorm)
    seed_set = seeds.as_set()
    new_words = sorted(
        w for w, sim in zip(space.words, sims)
        if sim >= tau and w not in seed_set)
    expanded = seeds.union(new_words, name=seeds.name)
    return Expansion(seeds=seeds, expanded=expanded,
                     unmatched=WordList(unmatched, name=seeds.name))
