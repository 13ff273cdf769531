"""Search sheared lattices i*u + j*v for a k x k block whose visibility
graph has interior degree 12 (or 8 and bipartite, with --bipartite)."""

import argparse
from collections import Counter
from itertools import product

from urvkit.geometry import sweep_pairs

D = 6  # coordinates in sixths; side length = D


def graph_degrees(pts):
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    for i in range(len(pts)):
        for j in range(i):
            if abs(xs[i] - xs[j]) < D and abs(ys[i] - ys[j]) < D:
                return None
    edges = sweep_pairs(xs, ys, D) + sweep_pairs(ys, xs, D)
    deg = Counter()
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    return deg, edges


def is_bipartite(n, edges):
    adj = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    colour = {}
    for s in range(n):
        if s in colour:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in colour:
                    colour[w] = 1 - colour[u]
                    stack.append(w)
                elif colour[w] == colour[u]:
                    return False
    return True


def block(u, v, k):
    return [(i * u[0] + j * v[0], i * u[1] + j * v[1]) for j in range(k) for i in range(k)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--bipartite", action="store_true")
    ap.add_argument("--k", type=int, default=8)
    args = ap.parse_args()
    want = 8 if args.bipartite else 12
    rng_a = range(D, 3 * D + 1)
    rng_b = range(-D, D + 1)
    hits = 0
    for a, b, c, d in product(rng_a, rng_b, rng_b, rng_a):
        if a * d - b * c <= 0:
            continue
        res = graph_degrees(block((a, b), (c, d), 5))
        if res is None or res[0][12] != want:  # index 12 = centre of 5x5
            continue
        res = graph_degrees(block((a, b), (c, d), args.k))
        if res is None:
            continue
        deg, edges = res
        if args.bipartite and not is_bipartite(args.k ** 2, edges):
            continue
        ms = Counter(deg[i] for i in range(args.k ** 2))
        hits += 1
        print((a, b), (c, d), len(edges), sorted(ms.items()))
        if hits > 40:
            break


if __name__ == "__main__":
    main()
