"""Computational evidence that K5 has no layout: seeded random sampling plus
exhaustive grid search at several resolutions."""

import argparse
import json
import time
from fractions import Fraction

from urvkit.audit import grid_search, refute_k5_random
from urvkit.graph import complete_graph


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    args = p.parse_args()
    t = time.perf_counter()
    rep = refute_k5_random(args.trials, args.seed)
    print(json.dumps({"refuter": json.loads(rep.to_json()), "seconds": round(time.perf_counter() - t, 1)}))
    for step, extent in ((Fraction(1), 8), (Fraction(1, 2), 6), (Fraction(1, 3), 4)):
        t = time.perf_counter()
        out = grid_search(complete_graph(5), step, extent, args.workers)
        print(json.dumps({"step": str(step), "extent": extent, "exhausted": out.exhausted,
                          "nodes": out.nodes, "seconds": round(time.perf_counter() - t, 1)}))


if __name__ == "__main__":
    main()
