#!/usr/bin/env python3
"""Regenerate sample_data/ (toy resources for the quickstart and the UI demo).

Everything is deterministic; re-running produces identical files.
"""

from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parent.parent / "sample_data"

# concept groups; words in one group end up near each other in the toy
# embedding space and share synonym edges
GROUPS = {
    "positive": ["happy", "glad", "merry", "joyful", "cheerful", "festive",
                 "delighted", "content"],
    "negative": ["sad", "blue", "gloomy", "unhappy", "miserable", "down"],
    "animal": ["dog", "hound", "puppy", "wolf", "cat"],
    "weather": ["cold", "chilly", "frosty", "warm", "mild"],
    "neutral": ["table", "rock", "street", "paper", "window", "door"],
}

# lang -> list of (foreign word, [english translations]); two translations
# for one foreign word is a colexification vote
DICTIONARIES = {
    "deu": [
        ("froh", ["happy", "glad"]), ("heiter", ["merry", "cheerful"]),
        ("freudig", ["joyful", "merry"]), ("festlich", ["festive"]),
        ("traurig", ["sad", "unhappy"]), ("truebe", ["gloomy", "blue"]),
        ("elend", ["miserable", "unhappy"]), ("hund", ["dog", "hound"]),
        ("welpe", ["puppy"]), ("kalt", ["cold", "chilly"]),
        ("frostig", ["frosty", "cold"]), ("warm", ["warm", "mild"]),
        ("tisch", ["table"]), ("stein", ["rock"]),
    ],
    "fra": [
        ("heureux", ["happy", "glad"]), ("joyeux", ["merry", "joyful"]),
        ("gai", ["cheerful", "merry"]), ("festif", ["festive", "merry"]),
        ("triste", ["sad", "blue"]), ("morose", ["gloomy", "sad"]),
        ("malheureux", ["unhappy", "miserable"]),
        ("chien", ["dog", "hound"]), ("froid", ["cold", "chilly"]),
        ("doux", ["mild", "warm"]), ("table", ["table"]),
        ("pierre", ["rock"]),
    ],
    "ita": [
        ("felice", ["happy", "joyful"]), ("allegro", ["merry", "cheerful"]),
        ("contento", ["glad", "content"]), ("festoso", ["festive", "merry"]),
        ("triste", ["sad", "gloomy"]), ("infelice", ["unhappy", "sad"]),
        ("cane", ["dog", "hound"]), ("cucciolo", ["puppy", "dog"]),
        ("freddo", ["cold", "frosty"]), ("mite", ["mild", "warm"]),
        ("tavolo", ["table"]), ("roccia", ["rock"]),
    ],
    "spa": [
        ("feliz", ["happy", "glad"]), ("alegre", ["merry", "cheerful"]),
        ("contento", ["content", "happy"]), ("festivo", ["festive"]),
        ("triste", ["sad", "blue"]), ("infeliz", ["unhappy", "miserable"]),
        ("perro", ["dog", "hound"]), ("cachorro", ["puppy", "dog"]),
        ("frio", ["cold", "chilly"]), ("templado", ["mild", "warm"]),
        ("mesa", ["table"]), ("roca", ["rock"]),
    ],
}

# en -> deu labels so the colex graph can be queried in German
EN_DE = [
    ("happy", "gluecklich"), ("glad", "froh"), ("merry", "heiter"),
    ("joyful", "freudig"), ("cheerful", "munter"), ("festive", "festlich"),
    ("content", "zufrieden"), ("sad", "traurig"), ("blue", "truebe"),
    ("gloomy", "duester"), ("unhappy", "ungluecklich"),
    ("miserable", "elend"), ("dog", "hund"), ("hound", "jagdhund"),
    ("puppy", "welpe"), ("cold", "kalt"), ("chilly", "kuehl"),
    ("frosty", "frostig"), ("warm", "warm"), ("mild", "mild"),
    ("table", "tisch"), ("rock", "stein"),
]

SYNONYM_EDGES = [
    ("happy", "glad"), ("happy", "merry"), ("happy", "content"),
    ("glad", "joyful"), ("merry", "festive"), ("merry", "cheerful"),
    ("joyful", "cheerful"), ("delighted", "happy"),
    ("sad", "blue"), ("sad", "unhappy"), ("gloomy", "blue"),
    ("unhappy", "miserable"), ("down", "sad"),
    ("dog", "hound"), ("dog", "puppy"),
    ("cold", "chilly"), ("cold", "frosty"), ("warm", "mild"),
]

CORPUS = [
    ("brown-1", "It was a merry and festive evening, everyone seemed happy "
                "and content with the glad tidings."),
    ("brown-2", "The gloomy sky made the street look sad and blue, a "
                "miserable day by any measure."),
    ("tweet-1", "so happy today! feeling joyful and cheerful"),
    ("tweet-2", "cold and chilly morning, frosty windows, feeling down"),
    ("tweet-3", "my puppy is the best dog, such a delighted little hound"),
    ("reddit-1", "Honestly a mild, warm afternoon at the table with paper "
                 "and a window view is all I need to be content."),
    ("reddit-2", "Unhappy with how gloomy this winter is, everything feels "
                 "miserable and cold."),
    ("reddit-3", "We threw a festive dinner and everyone left cheerful and "
                 "glad they came."),
]


def write(path, text):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    print(f"wrote {path}")


def main():
    for lang, entries in DICTIONARIES.items():
        rows = [f"{word}\t{target}" for word, targets in entries
                for target in targets]
        write(ROOT / "dictionaries" / f"{lang}-en.tsv",
              "".join(r + "\n" for r in rows))
    write(ROOT / "translations" / "en-de.tsv",
          "".join(f"{a}\t{b}\n" for a, b in EN_DE))

    write(ROOT / "synonyms.tsv",
          "".join(f"{a}\t{b}\n" for a, b in SYNONYM_EDGES))

    words = [w for group in GROUPS.values() for w in group]
    rng = np.random.default_rng(42)
    # orthonormal anchors keep the toy clusters apart at tau=0.5
    basis, _ = np.linalg.qr(rng.normal(size=(16, len(GROUPS))))
    anchors = {name: basis[:, i] for i, name in enumerate(GROUPS)}
    lines = [f"{len(words)} 16"]
    for name, group in GROUPS.items():
        for word in group:
            vec = anchors[name] + rng.normal(scale=0.22, size=16)
            lines.append(word + " " + " ".join(f"{v:.6f}" for v in vec))
    write(ROOT / "embeddings.vec", "".join(line + "\n" for line in lines))
    write(ROOT / "ranking.txt", "".join(w + "\n" for w in words))

    write(ROOT / "gold_positive.txt",
          "# positive-emotion gold list (wildcards on purpose)\n"
          "happy\nglad\nmerry\njoyful\ncheer*\nfestive\ndelight*\ncontent\n")
    write(ROOT / "dictionary.txt",
          "".join(w + "\n" for w in sorted(set(words)
                                           | {"cheery", "delightfully"})))
    write(ROOT / "seeds_positive.txt", "happy\nglad\nmerry\n")
    write(ROOT / "reference_positive.txt",
          "".join(w + "\n" for w in GROUPS["positive"]))
    write(ROOT / "corpus.jsonl",
          "".join('{"id": "%s", "text": "%s"}\n' % (i, t)
                  for i, t in CORPUS))


if __name__ == "__main__":
    main()
