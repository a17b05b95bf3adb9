#!/usr/bin/env python3
"""Tabulate graph classes of trivial extensions over the seeded gentle corpus."""
import argparse
from collections import Counter

from brauerkit.brauer import classify_graph, gamma_of_gentle
from brauerkit.corpus import CorpusConfig, gentle_corpus
from brauerkit.gentle import quiver_shape, rad_square_zero


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=CorpusConfig.seed)
    ap.add_argument("--trees", type=int, default=CorpusConfig.random_trees)
    ap.add_argument("--nontrees", type=int, default=CorpusConfig.random_nontrees)
    args = ap.parse_args()
    corpus = gentle_corpus(CorpusConfig(seed=args.seed, random_trees=args.trees, random_nontrees=args.nontrees))
    table = Counter()
    for part, items in (("tree", corpus.trees), ("non-tree", corpus.nontrees), ("cycle", corpus.tilde_a)):
        for p in items:
            cls = classify_graph(gamma_of_gentle(p))
            key = (part, quiver_shape(p).shape.value, "rad2=0" if rad_square_zero(p) else "rad2!=0", cls.tag.value)
            table[key] += 1
    print(f"{'corpus':9} {'quiver shape':16} {'radical':8} {'graph class':11} {'count':>5}")
    for key in sorted(table):
        print(f"{key[0]:9} {key[1]:16} {key[2]:8} {key[3]:11} {table[key]:>5}")


if __name__ == "__main__":
    main()
