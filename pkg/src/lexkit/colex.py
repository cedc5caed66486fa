"""Colexification network: construction from bilingual dictionaries,
label translation, and neighborhood expansion.

Two concepts are colexified by a language when one of its words translates
to both. The network links concept pairs colexified by at least
``min_languages`` distinct languages; expansion retrieves the neighbors of
the seed words' nodes. Concept nodes are identified by their English label
(the pivot), so English homographs collapse into one node; this is a known
limitation of the pivot representation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterable, Mapping

from .errors import LanguageUnavailable, NoData, ParseError
from .words import Expansion, WordList, normalize_word

BUNDLE_FORMAT = "colex-bundle"
BUNDLE_VERSION = 1


@dataclass(frozen=True)
class BilingualDictionary:
    """Translation table from one language into another.

    ``entries`` maps each source word to its set of target-language
    translations; all words are normalized.
    """

    source_lang: str
    target_lang: str
    entries: Mapping[str, frozenset[str]]

    @classmethod
    def from_pairs(cls, source_lang: str, target_lang: str,
                   pairs: Iterable[tuple[str, str]]) -> "BilingualDictionary":
        entries: dict[str, set[str]] = {}
        for src, tgt in pairs:
            entries.setdefault(normalize_word(src), set()).add(normalize_word(tgt))
        if not entries:
            raise NoData(f"no entries for {source_lang}->{target_lang}")
        return cls(source_lang, target_lang,
                   {w: frozenset(t) for w, t in entries.items()})


def load_bilingual_dictionary(path, source_lang=None, target_lang=None):
    """Read a `source_word<TAB>target_word` TSV.

    The language pair comes from explicit arguments, a
    ``# languages: src-tgt`` header comment, or a ``src-tgt`` file name stem,
    in that priority order.
    """
    path = Path(path)
    header_pair = None
    pairs = []
    with open(path, encoding="utf-8-sig") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped:
                continue
            if stripped.startswith("#"):
                body = stripped.lstrip("#").strip()
                if body.lower().startswith("languages:"):
                    spec = body.split(":", 1)[1].strip()
                    parts = spec.replace("-", " ").split()
                    if len(parts) != 2:
                        raise ParseError(f"bad languages header: {stripped!r}",
                                         path=str(path), line=lineno)
                    header_pair = (parts[0], parts[1])
                continue
            fields = stripped.split("\t")
            if len(fields) != 2:
                raise ParseError(
                    f"expected 2 tab-separated fields, got {len(fields)}",
                    path=str(path), line=lineno)
            pairs.append((fields[0], fields[1]))
    if source_lang is None or target_lang is None:
        inferred = header_pair
        if inferred is None:
            stem_parts = path.stem.split("-")
            if len(stem_parts) == 2 and all(stem_parts):
                inferred = (stem_parts[0], stem_parts[1])
        if inferred is None:
            raise ParseError(
                "language pair not declared (pass source/target, add a "
                "'# languages: src-tgt' header, or name the file src-tgt.tsv)",
                path=str(path))
        source_lang = source_lang or inferred[0]
        target_lang = target_lang or inferred[1]
    if not pairs:
        raise NoData(f"no entries in {path}")
    return BilingualDictionary.from_pairs(source_lang, target_lang, pairs)


@dataclass(frozen=True)
class ColexGraph:
    """Undirected weighted graph over concept nodes.

    ``node_labels[i]`` is node i's pivot-language label; edges are stored once
    as ``(a, b)`` with ``a < b`` and weigh the number of colexifying
    languages. ``label_maps[lang]`` maps each word of that language to the set
    of nodes it labels. Immutable after construction; expansions are pure.
    """

    node_labels: tuple[str, ...]
    edges: Mapping[tuple[int, int], int]
    label_maps: Mapping[str, Mapping[str, frozenset[int]]]
    pivot_lang: str = "en"
    min_languages: int = 2
    _adjacency: dict = field(default=None, repr=False, compare=False)
    _node_words: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_adjacency", None)
        object.__setattr__(self, "_node_words", {})

    @property
    def languages(self) -> tuple[str, ...]:
        return tuple(sorted(self.label_maps))

    def adjacency(self) -> dict[int, frozenset[int]]:
        if self._adjacency is None:
            adj: dict[int, set[int]] = {i: set() for i in range(len(self.node_labels))}
            for (a, b) in self.edges:
                adj[a].add(b)
                adj[b].add(a)
            object.__setattr__(self, "_adjacency",
                               {i: frozenset(v) for i, v in adj.items()})
        return self._adjacency

    def words_of_node(self, node: int, lang: str) -> tuple[str, ...]:
        """All words labelling ``node`` in ``lang``, sorted."""
        if lang not in self._node_words:
            rev: dict[int, list[str]] = {}
            for word, nodes in self.label_maps[lang].items():
                for n in nodes:
                    rev.setdefault(n, []).append(word)
            self._node_words[lang] = {n: tuple(sorted(ws)) for n, ws in rev.items()}
        return self._node_words[lang].get(node, ())

    def edge_multiset(self) -> tuple[tuple[str, str, int], ...]:
        """Structure signature: label pairs with weights, sorted."""
        return tuple(sorted(
            (self.node_labels[a], self.node_labels[b], w)
            for (a, b), w in self.edges.items()))


def build_colex_graph(dictionaries: list[BilingualDictionary],
                      min_languages: int = 2,
                      pivot_lang: str = "en") -> ColexGraph:
    """Build the network from dictionaries that translate into the pivot.

    Each language casts one vote per unordered pair of pivot words that any
    of its words translates to; several synonymous source words do not
    inflate a pair's weight. Pairs with fewer than ``min_languages`` votes
    are pruned, and the node set is whatever the kept edges touch.
    """
    if not dictionaries:
        raise NoData("no bilingual dictionaries given")
    for d in dictionaries:
        if d.target_lang != pivot_lang:
            raise ValueError(
                f"dictionary {d.source_lang}->{d.target_lang} does not "
                f"target the pivot language {pivot_lang!r}")
    votes: dict[tuple[str, str], set[str]] = {}
    for d in dictionaries:
        for translations in d.entries.values():
            for a, b in combinations(sorted(translations), 2):
                votes.setdefault((a, b), set()).add(d.source_lang)
    kept = {pair: len(langs) for pair, langs in votes.items()
            if len(langs) >= min_languages}
    labels = tuple(sorted({w for pair in kept for w in pair}))
    index = {label: i for i, label in enumerate(labels)}
    edges = {(index[a], index[b]): weight for (a, b), weight in kept.items()}
    label_map = {label: frozenset({i}) for label, i in index.items()}
    return ColexGraph(node_labels=labels, edges=edges,
                      label_maps={pivot_lang: label_map},
                      pivot_lang=pivot_lang, min_languages=min_languages)


def translate_labels(graph: ColexGraph, dictionary: BilingualDictionary,
                     lang: str) -> ColexGraph:
    """Attach ``lang`` labels to the graph via a pivot->lang dictionary.

    Every translation of a node's pivot label maps to that node; a foreign
    word translating several pivot labels maps to all of their nodes. The
    edge structure is untouched, so expansion in any labelled language runs
    on the same network.
    """
    if dictionary.source_lang != graph.pivot_lang:
        raise ValueError(
            f"dictionary source {dictionary.source_lang!r} is not the "
            f"graph pivot {graph.pivot_lang!r}")
    new_map: dict[str, set[int]] = {}
    for node, label in enumerate(graph.node_labels):
        for translation in dictionary.entries.get(label, ()):
            new_map.setdefault(translation, set()).add(node)
    label_maps = dict(graph.label_maps)
    label_maps[lang] = {w: frozenset(nodes) for w, nodes in new_map.items()}
    return ColexGraph(node_labels=graph.node_labels, edges=graph.edges,
                      label_maps=label_maps, pivot_lang=graph.pivot_lang,
                      min_languages=graph.min_languages)


def expand_colex(graph: ColexGraph, seeds: WordList, lang: str) -> Expansion:
    """Retrieve the neighbors of the seed words' nodes in ``lang``.

    Seeds labelling several nodes expand through all of them. The retrieved
    words W are the neighbor nodes' labels minus the seeds; the expanded
    lexicon is seeds followed by W in sorted order. Seeds that match no node
    come back in ``unmatched``; when that is all of them the expansion
    degenerates to the seeds and counts as not expandable.
    """
    if lang not in graph.label_maps:
        raise LanguageUnavailable(
            f"no {lang!r} labels; available: {', '.join(graph.languages)}")
    label_map = graph.label_maps[lang]
    matched_nodes: set[int] = set()
    unmatched = []
    for seed in seeds:
        nodes = label_map.get(seed)
        if nodes:
            matched_nodes.update(nodes)
        else:
            unmatched.append(seed)
    adjacency = graph.adjacency()
    neighbor_nodes: set[int] = set()
    for node in matched_nodes:
        neighbor_nodes.update(adjacency[node])
    new_words = sorted(
        {w for n in neighbor_nodes for w in graph.words_of_node(n, lang)}
        - seeds.as_set())
    expanded = seeds.union(new_words, name=seeds.name)
    return Expansion(seeds=seeds, expanded=expanded,
                     unmatched=WordList(unmatched, name=seeds.name))


def save_colex_bundle(graph: ColexGraph, directory) -> None:
    """Write the versioned TSV bundle (nodes, edges, per-language labels)."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    manifest = {
        "format": BUNDLE_FORMAT,
        "version": BUNDLE_VERSION,
        "pivot_lang": graph.pivot_lang,
        "min_languages": graph.min_languages,
        "languages": list(graph.languages),
        "n_nodes": len(graph.node_labels),
        "n_edges": len(graph.edges),
    }
    (directory / "manifest.json").write_text(
        json.dumps(manifest, sort_keys=True, indent=2) + "\n", encoding="utf-8")
    (directory / "nodes.tsv").write_text(
        "".join(f"{i}\t{label}\n" for i, label in enumerate(graph.node_labels)),
        encoding="utf-8")
    edge_rows = sorted(graph.edges.items())
    (directory / "edges.tsv").write_text(
        "".join(f"{a}\t{b}\t{w}\n" for (a, b), w in edge_rows),
        encoding="utf-8")
    for lang in graph.languages:
        rows = sorted((word, node)
                      for word, nodes in graph.label_maps[lang].items()
                      for node in nodes)
        (directory / f"labels.{lang}.tsv").write_text(
            "".join(f"{word}\t{node}\n" for word, node in rows),
            encoding="utf-8")


def load_colex_bundle(directory) -> ColexGraph:
    """Load a bundle written by :func:`save_colex_bundle`."""
    directory = Path(directory)
    manifest_path = directory / "manifest.json"
    if not manifest_path.exists():
        raise ParseError("not a colex bundle (manifest.json missing)",
                         path=str(directory))
    manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
    if manifest.get("format") != BUNDLE_FORMAT:
        raise ParseError(f"unexpected bundle format {manifest.get('format')!r}",
                         path=str(manifest_path))
    if manifest.get("version") != BUNDLE_VERSION:
        raise ParseError(f"unsupported bundle version {manifest.get('version')!r}",
                         path=str(manifest_path))

    labels: list[str] = []
    nodes_path = directory / "nodes.tsv"
    for lineno, line in enumerate(nodes_path.read_text(encoding="utf-8").splitlines(), 1):
        fields = line.split("\t")
        if len(fields) != 2:
            raise ParseError("expected 'id<TAB>label'", path=str(nodes_path), line=lineno)
        if int(fields[0]) != lineno - 1:
            raise ParseError("node ids must be dense and ordered",
                             path=str(nodes_path), line=lineno)
        labels.append(fields[1])

    edges: dict[tuple[int, int], int] = {}
    edges_path = directory / "edges.tsv"
    for lineno, line in enumerate(edges_path.read_text(encoding="utf-8").splitlines(), 1):
        fields = line.split("\t")
        if len(fields) != 3:
            raise ParseError("expected 'a<TAB>b<TAB>weight'",
                             path=str(edges_path), line=lineno)
        a, b, w = int(fields[0]), int(fields[1]), int(fields[2])
        if not (0 <= a < b < len(labels)):
            raise ParseError(f"bad edge ({a}, {b})", path=str(edges_path), line=lineno)
        edges[(a, b)] = w

    label_maps: dict[str, dict[str, frozenset[int]]] = {}
    for lang in manifest.get("languages", []):
        lmap: dict[str, set[int]] = {}
        lpath = directory / f"labels.{lang}.tsv"
        for lineno, line in enumerate(lpath.read_text(encoding="utf-8").splitlines(), 1):
            fields = line.split("\t")
            if len(fields) != 2:
                raise ParseError("expected 'word<TAB>node_id'",
                                 path=str(lpath), line=lineno)
            lmap.setdefault(fields[0], set()).add(int(fields[1]))
        label_maps[lang] = {w: frozenset(nodes) for w, nodes in lmap.items()}

    return ColexGraph(node_labels=tuple(labels), edges=edges,
                      label_maps=label_maps,
                      pivot_lang=manifest["pivot_lang"],
                      min_languages=manifest["min_languages"])
