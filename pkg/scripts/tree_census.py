"""Classify every unlabelled tree up to a size bound and round-trip the
realizable ones through the layout algorithm (needs networkx)."""

import argparse
from collections import Counter

import networkx as nx

from urvkit.decompose import URVG, classify_tree
from urvkit.geometry import extract_graph
from urvkit.graph import Graph
from urvkit.synth import layout_tree


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=10)
    args = p.parse_args()
    print("n  trees  URVG  weak-only")
    for n in range(2, args.max_n + 1):
        kinds = Counter()
        for t in nx.nonisomorphic_trees(n):
            g = Graph.from_edges(t.edges(), t.nodes())
            cls = classify_tree(g)
            kinds[cls.kind] += 1
            if cls.kind == URVG:
                assert extract_graph(layout_tree(g, cls.decomposition)) == g
        print(f"{n:<2} {sum(kinds.values()):>6} {kinds[URVG]:>5} {kinds['WeakOnly']:>10}")


if __name__ == "__main__":
    main()
