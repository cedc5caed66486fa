"""Shared on-disk fixtures for CLI and service tests."""

import numpy as np
import pytest

TOY_DICTIONARIES = {
    "aaa-en.tsv": [
        ("a1", "happy"), ("a1", "glad"), ("a2", "happy"), ("a2", "merry"),
        ("a3", "sad"), ("a3", "blue"), ("a4", "merry"), ("a4", "festive"),
        ("a5", "cold"), ("a5", "chilly"),
    ],
    "bbb-en.tsv": [
        ("b1", "happy"), ("b1", "glad"), ("b2", "merry"), ("b2", "festive"),
        ("b3", "sad"), ("b3", "blue"), ("b4", "happy"), ("b4", "merry"),
        ("b5", "dog"), ("b5", "hound"),
    ],
    "ccc-en.tsv": [
        ("c1", "sad"), ("c1", "blue"), ("c2", "cold"), ("c2", "chilly"),
        ("c3", "dog"), ("c3", "hound"), ("c4", "glad"), ("c4", "joyful"),
    ],
}

SYNONYM_EDGES = [
    ("happy", "glad"), ("happy", "merry"), ("glad", "joyful"),
    ("sad", "blue"), ("sad", "unhappy"), ("dog", "hound"),
    ("cold", "chilly"),
]


@pytest.fixture
def dict_dir(tmp_path):
    d = tmp_path / "dicts"
    d.mkdir()
    for name, pairs in TOY_DICTIONARIES.items():
        (d / name).write_text(
            "".join(f"{a}\t{b}\n" for a, b in pairs), encoding="utf-8")
    return d


@pytest.fixture
def edges_file(tmp_path):
    path = tmp_path / "synonyms.tsv"
    path.write_text("".join(f"{a}\t{b}\n" for a, b in SYNONYM_EDGES),
                    encoding="utf-8")
    return path


@pytest.fixture
def embedding_files(tmp_path):
    """A 12-word space where the first four words cluster tightly."""
    rng = np.random.default_rng(77)
    words = ["happy", "glad", "merry", "joyful", "sad", "blue", "dog",
             "hound", "cold", "chilly", "table", "rock"]
    base = rng.normal(size=4)
    base /= np.linalg.norm(base)
    rows = []
    for i, word in enumerate(words):
        if i < 4:
            vec = base + rng.normal(scale=0.15, size=4)
        else:
            vec = rng.normal(size=4)
        rows.append((word, vec))
    vec_path = tmp_path / "toy.vec"
    vec_path.write_text(
        f"{len(words)} 4\n" + "".join(
            w + " " + " ".join(repr(float(v)) for v in vec) + "\n"
            for w, vec in rows),
        encoding="utf-8")
    ranking_path = tmp_path / "ranking.txt"
    ranking_path.write_text("".join(w + "\n" for w in words),
                            encoding="utf-8")
    return vec_path, ranking_path


@pytest.fixture
def gold_file(tmp_path):
    path = tmp_path / "gold.txt"
    path.write_text("happy\nglad\nmerry\njoyful\nfestive\ncheerful\n",
                    encoding="utf-8")
    return path


@pytest.fixture
def seeds_file(tmp_path):
    path = tmp_path / "seeds.txt"
    path.write_text("happy\nglad\n", encoding="utf-8")
    return path


@pytest.fixture
def corpus_file(tmp_path):
    path = tmp_path / "corpus.jsonl"
    rows = [
        '{"id": "d1", "text": "So happy and glad today, a merry day"}',
        '{"id": "d2", "text": "The dog sat on the cold rock"}',
        '{"id": "d3", "text": "Sad and blue, feeling unhappy"}',
        '{"id": "d4", "text": "A joyful festive gathering of friends"}',
        '{"id": "d5", "text": "Plain table and a chilly morning"}',
    ]
    path.write_text("".join(r + "\n" for r in rows), encoding="utf-8")
    return path
