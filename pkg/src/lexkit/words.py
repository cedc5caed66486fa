"""Words, word lists and wildcard patterns: the currency every module trades in.

A word is a plain ``str`` that went through :func:`normalize_word` (lowercased,
trimmed, no whitespace inside). A :class:`WordList` is an ordered, deduplicated
collection of such words. Wildcard patterns are trailing-star prefix patterns
only; anything fancier is rejected at parse time.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from .errors import InvalidPattern, InvalidWord, NoData, ParseError

log = logging.getLogger(__name__)


def normalize_word(raw: str) -> str:
    """Trim and lowercase ``raw`` (unicode-aware). Stable under repetition.

    Raises InvalidWord when the result is empty or still contains whitespace
    (multi-word expressions are out of scope).
    """
    word = raw.strip().lower()
    if not word:
        raise InvalidWord(f"empty word after trimming: {raw!r}")
    if any(ch.isspace() for ch in word):
        raise InvalidWord(f"word contains whitespace: {raw!r}")
    return word


class WordList:
    """Ordered, deduplicated list of normalized words.

    Iteration order is insertion order after deduplication, which makes every
    downstream computation deterministic. Instances are immutable; set-style
    helpers return new lists.
    """

    __slots__ = ("name", "_words", "_index")

    def __init__(self, words: Iterable[str] = (), name: str = ""):
        self.name = name
        seen: dict[str, None] = {}
        for raw in words:
            seen.setdefault(normalize_word(raw), None)
        self._words: tuple[str, ...] = tuple(seen)
        self._index = frozenset(self._words)

    @property
    def words(self) -> tuple[str, ...]:
        return self._words

    def __iter__(self) -> Iterator[str]:
        return iter(self._words)

    def __len__(self) -> int:
        return len(self._words)

    def __contains__(self, word: object) -> bool:
        return word in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WordList):
            return NotImplemented
        return self._words == other._words

    def __hash__(self) -> int:
        return hash(self._words)

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<WordList{label} n={len(self._words)}>"

    def as_set(self) -> frozenset[str]:
        return self._index

    def union(self, other: Iterable[str], name: str | None = None) -> "WordList":
        return WordList(list(self._words) + list(other),
                        name=self.name if name is None else name)

    def without(self, other: Iterable[str], name: str | None = None) -> "WordList":
        drop = set(other)
        return WordList((w for w in self._words if w not in drop),
                        name=self.name if name is None else name)

    def renamed(self, name: str) -> "WordList":
        return WordList(self._words, name=name)


@dataclass(frozen=True)
class WildcardPattern:
    """Trailing-star prefix pattern; without the star it is an exact word."""

    stem: str
    trailing_star: bool = False

    def __post_init__(self):
        if "*" in self.stem:
            raise InvalidPattern(f"star inside stem: {self.stem!r}")
        if not self.stem:
            raise InvalidPattern("empty stem")

    def matches(self, word: str) -> bool:
        if self.trailing_star:
            return word.startswith(self.stem)
        return word == self.stem

    def __str__(self) -> str:
        return self.stem + ("*" if self.trailing_star else "")


def parse_pattern(text: str) -> WildcardPattern:
    """Parse one word-list entry into a pattern.

    Only a single trailing ``*`` is recognised; interior stars are malformed.
    """
    entry = text.strip()
    if entry.endswith("*"):
        stem = entry[:-1]
        if "*" in stem:
            raise InvalidPattern(f"interior star: {entry!r}")
        return WildcardPattern(normalize_word(stem), trailing_star=True)
    if "*" in entry:
        raise InvalidPattern(f"interior star: {entry!r}")
    return WildcardPattern(normalize_word(entry), trailing_star=False)


def expand_wildcards(
    patterns: Iterable[WildcardPattern],
    dictionary: WordList,
    name: str = "",
) -> tuple[WordList, list[WildcardPattern]]:
    """Resolve wildcard patterns against a dictionary of full-form words.

    Starred patterns collect every dictionary word sharing the stem prefix.
    Exact patterns pass through even when the dictionary lacks them: dropping
    them would silently shrink a gold lexicon. Starred patterns with zero
    matches are dropped and returned as the second element.
    """
    if len(dictionary) == 0:
        raise NoData("empty dictionary")
    out: list[str] = []
    unmatched: list[WildcardPattern] = []
    for pattern in patterns:
        if pattern.trailing_star:
            hits = [w for w in dictionary if w.startswith(pattern.stem)]
            if not hits:
                log.info("wildcard %s matched nothing, dropped", pattern)
                unmatched.append(pattern)
            out.extend(hits)
        else:
            out.append(pattern.stem)
    return WordList(out, name=name), unmatched


@dataclass(frozen=True)
class Expansion:
    """Result of one seed expansion: L = seeds plus the retrieved words W.

    ``unmatched`` holds the seeds that could not be mapped onto the resource.
    When every seed is unmatched the list counts as not expandable and
    ``expanded`` equals the seeds.
    """

    seeds: WordList
    expanded: WordList
    unmatched: WordList

    @property
    def new_words(self) -> WordList:
        """W: the retrieved words, i.e. expanded without the seeds."""
        return self.expanded.without(self.seeds, name=self.expanded.name)

    @property
    def expandable(self) -> bool:
        return len(self.unmatched) < len(self.seeds)


def _iter_entries(path: str | Path):
    """Yield (line_number, entry) for non-empty, non-comment lines."""
    with open(path, encoding="utf-8-sig") as fh:
        for lineno, line in enumerate(fh, start=1):
            entry = line.strip()
            if not entry or entry.startswith("#"):
                continue
            yield lineno, entry


def load_word_list(path: str | Path, name: str | None = None) -> WordList:
    """Read a plain word-list file: one word per line, '#' comments.

    Wildcard entries are rejected here; use :func:`load_pattern_list` plus
    :func:`expand_wildcards` for files that carry them.
    """
    path = Path(path)
    words = []
    for lineno, entry in _iter_entries(path):
        if "*" in entry:
            raise ParseError("wildcard entry in plain word list "
                             f"({entry!r}); de-wildcard it first",
                             path=str(path), line=lineno)
        try:
            words.append(normalize_word(entry))
        except InvalidWord as exc:
            raise ParseError(str(exc), path=str(path), line=lineno) from exc
    return WordList(words, name=path.stem if name is None else name)


def load_pattern_list(path: str | Path) -> list[WildcardPattern]:
    """Read a word-list file that may contain trailing-star wildcards."""
    path = Path(path)
    patterns = []
    for lineno, entry in _iter_entries(path):
        try:
            patterns.append(parse_pattern(entry))
        except (InvalidPattern, InvalidWord) as exc:
            raise ParseError(str(exc), path=str(path), line=lineno) from exc
    return patterns


def save_word_list(word_list: WordList, path: str | Path) -> None:
    """Write one word per line, newline-terminated, UTF-8."""
    Path(path).write_text(
        "".join(w + "\n" for w in word_list), encoding="utf-8")
