"""Word-word synonym graphs loaded from edge lists.

Carrier for WordNet/OdeNet style data: the heavy lifting of flattening
synsets into a word-word edge list lives in ``scripts/export_wordnet_edges.py``
so the traversal policy stays explicit and replaceable. Here the graph is a
plain symmetric adjacency and expansion is neighbor retrieval.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Mapping

from .errors import InvalidWord, ParseError
from .words import Expansion, WordList, normalize_word


class SynonymGraph:
    """Symmetric word adjacency with no self-loops. Immutable after load."""

    __slots__ = ("_adjacency",)

    def __init__(self, adjacency: Mapping[str, Iterable[str]]):
        adj: dict[str, set[str]] = {}
        for a, neighbors in adjacency.items():
            for b in neighbors:
                if a == b:
                    continue
                adj.setdefault(a, set()).add(b)
                adj.setdefault(b, set()).add(a)
        self._adjacency = {w: frozenset(n) for w, n in adj.items()}

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[str, str]]) -> "SynonymGraph":
        pairs: dict[str, set[str]] = {}
        for a, b in edges:
            a, b = normalize_word(a), normalize_word(b)
            if a == b:
                continue
            pairs.setdefault(a, set()).add(b)
        return cls(pairs)

    @property
    def words(self) -> frozenset[str]:
        return frozenset(self._adjacency)

    def neighbors(self, word: str) -> frozenset[str]:
        return self._adjacency.get(word, frozenset())

    def __contains__(self, word: object) -> bool:
        return word in self._adjacency

    def __len__(self) -> int:
        return len(self._adjacency)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SynonymGraph):
            return NotImplemented
        return self._adjacency == other._adjacency

    __hash__ = None

    def n_edges(self) -> int:
        return sum(len(n) for n in self._adjacency.values()) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((len(n) for n in self._adjacency.values()),
                            reverse=True))

    def edge_set(self) -> frozenset[tuple[str, str]]:
        return frozenset(
            (a, b) if a < b else (b, a)
            for a, neighbors in self._adjacency.items() for b in neighbors)


def load_synonym_graph(path) -> SynonymGraph:
    """Read a `word_a<TAB>word_b` edge list; '#' starts a comment line.

    Duplicate edges collapse, orientation does not matter, self-loops are
    dropped (a word is trivially its own synonym).
    """
    path = Path(path)
    edges = []
    with open(path, encoding="utf-8-sig") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            fields = stripped.split("\t")
            if len(fields) != 2:
                raise ParseError(
                    f"expected 2 tab-separated fields, got {len(fields)}",
                    path=str(path), line=lineno)
            try:
                edges.append((normalize_word(fields[0]), normalize_word(fields[1])))
            except InvalidWord as exc:
                raise ParseError(str(exc), path=str(path), line=lineno) from exc
    return SynonymGraph.from_edges(edges)


def save_synonym_graph(graph: SynonymGraph, path) -> None:
    """Write the canonical edge list (each undirected edge once, sorted)."""
    rows = sorted(graph.edge_set())
    Path(path).write_text(
        "".join(f"{a}\t{b}\n" for a, b in rows), encoding="utf-8")


def expand_synonym(graph: SynonymGraph, seeds: WordList) -> Expansion:
    """Retrieve the neighbors of all seed words present in the graph.

    Same contract as the colexification expander: W is the union of the
    matched seeds' neighborhoods minus the seeds themselves, and an
    expansion where no seed is on the graph counts as not expandable.
    """
    matched: list[str] = []
    unmatched: list[str] = []
    for seed in seeds:
        (matched if seed in graph else unmatched).append(seed)
    new_words: set[str] = set()
    for seed in matched:
        new_words.update(graph.neighbors(seed))
    new_words -= seeds.as_set()
    expanded = seeds.union(sorted(new_words), name=seeds.name)
    return Expansion(seeds=seeds, expanded=expanded,
                     unmatched=WordList(unmatched, name=seeds.name))
