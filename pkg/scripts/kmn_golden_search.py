"""Rediscover the maximal K_{m,n} layouts by grid search and print them in
the layout text format (the frozen copies live in urvkit.synth.KMN_LAYOUTS)."""

import argparse
import time
from fractions import Fraction

from urvkit.audit import grid_search
from urvkit.formats import write_layout
from urvkit.graph import complete_bipartite


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--step", type=Fraction, default=Fraction(1, 2))
    p.add_argument("--extent", type=int, default=6)
    p.add_argument("--workers", type=int, default=1)
    args = p.parse_args()
    for m, n in ((1, 6), (2, 6), (3, 4), (4, 4), (3, 5)):
        t = time.perf_counter()
        out = grid_search(complete_bipartite(m, n), args.step, args.extent, args.workers)
        dt = time.perf_counter() - t
        head = f"K_{m},{n}: {'exhausted' if out.exhausted else 'found'} after {out.nodes} nodes in {dt:.1f}s"
        print(write_layout(out.layout, header=head) if out.layout else f"# {head}\n")


if __name__ == "__main__":
    main()
