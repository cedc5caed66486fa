#!/usr/bin/env python3
"""Export a word-word synonym edge list from a synset resource.

The synonym expander consumes a flat `word_a<TAB>word_b` edge list; this
script produces one. Two sources are supported:

  --nltk-wordnet        flatten the NLTK WordNet corpus (requires `pip
                        install nltk` and the wordnet corpus download)
  --synset-lines FILE   generic path: a text file with one synset per line,
                        members separated by tabs or spaces (OdeNet and
                        other wordnets are easy to dump into this shape)

Two words become adjacent when they share a synset. Pass --relations to also
connect lemmas across directly related synsets (similar-to, also-see,
derivationally related); the default stays co-membership only, which is the
conservative reading of "neighbors". Multi-word lemmas are skipped: the
toolkit's word lists are single tokens.

Examples:
  python scripts/export_wordnet_edges.py --nltk-wordnet --out wordnet.tsv
  python scripts/export_wordnet_edges.py --synset-lines odenet_synsets.txt \
      --out odenet.tsv
"""

import argparse
import sys
from itertools import combinations


def norm(lemma: str):
    word = lemma.strip().lower().replace("_", " ")
    if not word or " " in word:
        return None
    return word


def edges_from_groups(groups):
    edges = set()
    for members in groups:
        words = sorted({w for w in (norm(m) for m in members) if w})
        for a, b in combinations(words, 2):
            edges.add((a, b))
    return edges


def groups_from_synset_lines(path):
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            yield line.replace("\t", " ").split(" ")


def groups_from_nltk(include_relations: bool):
    try:
        from nltk.corpus import wordnet
        wordnet.ensure_loaded()
    except LookupError:
        sys.exit("wordnet corpus missing: python -m nltk.downloader wordnet")
    except ImportError:
        sys.exit("nltk is not installed: pip install nltk")
    for synset in wordnet.all_synsets():
        members = [lemma.name() for lemma in synset.lemmas()]
        yield members
        if include_relations:
            related = (synset.similar_tos() + synset.also_sees())
            for other in related:
                yield members + [lemma.name() for lemma in other.lemmas()]
            for lemma in synset.lemmas():
                for other in lemma.derivationally_related_forms():
                    yield [lemma.name(), other.name()]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--nltk-wordnet", action="store_true")
    source.add_argument("--synset-lines", metavar="FILE")
    parser.add_argument("--relations", action="store_true",
                        help="also connect lemmas of directly related "
                             "synsets (default: co-membership only)")
    parser.add_argument("--out", required=True)
    args = parser.parse_args()

    if args.nltk_wordnet:
        groups = groups_from_nltk(args.relations)
    else:
        groups = groups_from_synset_lines(args.synset_lines)

    edges = sorted(edges_from_groups(groups))
    with open(args.out, "w", encoding="utf-8") as fh:
        for a, b in edges:
            fh.write(f"{a}\t{b}\n")
    print(f"wrote {len(edges)} edges to {args.out}")


if __name__ == "__main__":
    main()
