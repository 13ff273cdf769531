"""Extremal trees, level-count recurrences, edge bounds and dense layouts."""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import count

from urvkit.decompose import LEG, SPINE, Decomposition
from urvkit.geometry import Layout, extract_graph, validate_layout
from urvkit.graph import Graph, bipartition

RED, BLUE = "red", "blue"


@dataclass(frozen=True)
class RootedTree:
    graph: Graph
    root: object
    depth: dict

    def level_sizes(self) -> list[int]:
        """Number of vertices at depth 1, 2, ..., max depth."""
        top = max(self.depth.values(), default=0)
        sizes = [0] * top
        for d in self.depth.values():
            if d:
                sizes[d - 1] += 1
        return sizes


def gen_TBs(s: int) -> RootedTree:
    """The depth-s unit bar visibility tree with the most edges.

    A spine of 2s+1 vertices rooted at its centre, and from every spine
    vertex a leg running down to depth s.  It has s^2 + 2s edges.
    """
    if s < 1:
        raise ValueError("depth must be at least 1")
    ids = count()
    root = next(ids)
    depth = {root: 0}
    edges = []

    def leg(start, d0):
        prev = start
        for d in range(d0 + 1, s + 1):
            v = next(ids)
            depth[v] = d
            edges.append((prev, v))
            prev = v

    leg(root, 0)
    for _side in range(2):
        prev = root
        for d in range(1, s + 1):
            v = next(ids)
            depth[v] = d
            edges.append((prev, v))
            leg(v, d)
            prev = v
    return RootedTree(Graph.from_edges(edges, [root]), root, depth)


# children of a vertex, keyed by the colour and role of the edge to its parent
_TR_RULES = {
    (BLUE, SPINE): [(BLUE, SPINE), (RED, SPINE), (RED, SPINE), (BLUE, LEG), (RED, LEG)],
    (RED, SPINE): [(RED, SPINE), (BLUE, SPINE), (BLUE, SPINE), (RED, LEG), (BLUE, LEG)],
    (BLUE, LEG): [(RED, SPINE), (RED, SPINE), (BLUE, LEG), (RED, LEG)],
    (RED, LEG): [(BLUE, SPINE), (BLUE, SPINE), (RED, LEG), (BLUE, LEG)],
}
_TR_ROOT = [(BLUE, SPINE), (BLUE, SPINE), (RED, SPINE), (RED, SPINE), (BLUE, LEG), (RED, LEG)]


def gen_TRs(s: int) -> tuple[RootedTree, Decomposition]:
    """The depth-s URV tree with the most vertices on every level.

    Red edges form f1 (horizontal) and blue edges f2 (vertical).
    """
    if s < 1:
        raise ValueError("depth must be at least 1")
    ids = count()
    root = next(ids)
    depth = {root: 0}
    colour, role = {}, {}
    frontier = []
    for kind in _TR_ROOT:
        v = next(ids)
        depth[v] = 1
        e = frozenset((root, v))
        colour[e], role[e] = kind
        frontier.append((v, kind))
    for d in range(2, s + 1):
        nxt = []
        for u, kind in frontier:
            for child_kind in _TR_RULES[kind]:
                v = next(ids)
                depth[v] = d
                e = frozenset((u, v))
                colour[e], role[e] = child_kind
                nxt.append((v, child_kind))
        frontier = nxt
    g = Graph(frozenset(depth), frozenset(colour))
    f1 = frozenset(e for e, c in colour.items() if c == RED)
    f2 = frozenset(e for e, c in colour.items() if c == BLUE)
    return RootedTree(g, root, depth), Decomposition(f1, f2, role)


@dataclass(frozen=True)
class LevelCounts:
    a: tuple
    b: tuple
    c: tuple


def level_counts(s: int) -> LevelCounts:
    """Exact a_k, b_k, c_k for k = 1..s from the (a, b) recurrence."""
    if s < 1:
        raise ValueError("s must be at least 1")
    a, b = [4], [2]
    for _ in range(s - 1):
        a.append(3 * a[-1] + 2 * b[-1])
        b.append(2 * a[-2] + 2 * b[-1])
    return LevelCounts(tuple(a), tuple(b), tuple(x + y for x, y in zip(a, b)))


def level_counts_ac(s: int) -> tuple[tuple, tuple]:
    """The same counts from the (a, c) recurrence c_k = a_{k-1} + 4 c_{k-1}."""
    a, c = [4], [6]
    for _ in range(s - 1):
        a, c = a + [a[-1] + 2 * c[-1]], c + [a[-1] + 4 * c[-1]]
    return tuple(a), tuple(c)


def c_closed(k: int) -> float:
    r = math.sqrt(17)
    return (
        2.0 ** (-1 - 2 * k)
        / 17
        * (
            (17 - 7 * r) * (10 - 2 * r) ** k
            + 2.0 ** (1 + k) * r * (5 + r) ** k
            + (2 * (5 + r)) ** k * (17 + 5 * r)
        )
    )


def edges_closed(s: int) -> float:
    r = math.sqrt(17)
    return -2 + (1 - 3 / r) * ((5 - r) / 2) ** s + (1 + 3 / r) * ((5 + r) / 2) ** s


# ---------------------------------------------------------------------------
# edge bounds


def _ceil_sqrt(n: int) -> int:
    r = math.isqrt(n)
    return r if r * r == n else r + 1


@dataclass(frozen=True)
class BoundsReport:
    n: int
    urvg_bound: int
    bipartite_bound: int
    dense_target: int
    dense_bipartite_target: int

    def to_json(self) -> str:
        return json.dumps({"format": 1, **asdict(self)}, sort_keys=True)

    def table(self) -> str:
        rows = [
            ("n", self.n),
            ("max edges, any URVG", self.urvg_bound),
            ("max edges, bipartite URVG", self.bipartite_bound),
            ("dense construction target", self.dense_target),
            ("dense bipartite target", self.dense_bipartite_target),
        ]
        width = max(len(r[0]) for r in rows)
        return "\n".join(f"{name:<{width}}  {val}" for name, val in rows)


def urvg_bound(n: int) -> int:
    return 6 * n - 4 * _ceil_sqrt(n) + 1


def bipartite_bound(n: int) -> int:
    return 4 * n - 2 * _ceil_sqrt(n) + 5


def dense_target(n: int) -> int:
    return 6 * n - 12 * math.isqrt(n) + 6


def dense_bipartite_target(n: int) -> int:
    return 4 * n - 8 * _ceil_sqrt(n) + 4


def bounds(n: int) -> BoundsReport:
    if n < 1:
        raise ValueError("n must be positive")
    return BoundsReport(n, urvg_bound(n), bipartite_bound(n), dense_target(n), dense_bipartite_target(n))


# ---------------------------------------------------------------------------
# dense layouts

# Lattice bases (u, v); square (i, j) sits at i*u + j*v.
DENSE_BASIS = ((Fraction(7, 6), Fraction(-1, 3)), (Fraction(1, 3), Fraction(7, 6)))
DENSE_BIPARTITE_BASIS = ((Fraction(1), Fraction(-1)), (Fraction(1, 2), Fraction(3, 2)))


def _lattice_point(basis, i, j):
    (ux, uy), (vx, vy) = basis
    return i * ux + j * vx, i * uy + j * vy


def lattice_block(basis, k: int) -> Layout:
    """k x k block of the lattice; square (i, j) gets id ``j*k + i``."""
    return Layout.from_coords({j * k + i: _lattice_point(basis, i, j) for j in range(k) for i in range(k)})


def _ring(k: int, r: int = 1) -> list:
    """Lattice indices just outside the k x k block: top, right, bottom, left."""
    lo, hi = -r, k - 1 + r
    top = [(i, hi) for i in range(lo, hi + 1)]
    right = [(hi, j) for j in range(hi - 1, lo - 1, -1)]
    bottom = [(i, lo) for i in range(hi - 1, lo - 1, -1)]
    left = [(lo, j) for j in range(lo + 1, hi)]
    return top + right + bottom + left


def _grow(layout: Layout, basis, k: int, extra: int, gain: int, keep_bipartite: bool) -> Layout:
    edges = len(extract_graph(layout).edges)
    candidates = _ring(k) + _ring(k, 2)
    used = set()
    for _ in range(extra):
        for idx in candidates:
            if idx in used:
                continue
            trial = layout.with_square(len(layout), *_lattice_point(basis, *idx))
            if validate_layout(trial):
                continue
            g = extract_graph(trial)
            if len(g.edges) - edges < gain:
                continue
            if keep_bipartite and bipartition(g) is None:
                continue
            layout, edges = trial, len(g.edges)
            used.add(idx)
            break
        else:
            raise RuntimeError(f"no lattice square adds {gain} edges at size {len(layout)}")
    return layout


def gen_dense_layout(n: int) -> Layout:
    """A layout on n >= 64 squares with at least 6n - 12 floor(sqrt n) + 6 edges.

    n = k^2 uses a k x k block of a sheared lattice whose interior squares
    see three squares on each side; other n grow the block one lattice
    square at a time, each adding at least six edges.
    """
    if n < 64:
        raise ValueError("the dense construction needs n >= 64")
    k = math.isqrt(n)
    return _grow(lattice_block(DENSE_BASIS, k), DENSE_BASIS, k, n - k * k, 6, False)


def gen_dense_bipartite_layout(n: int) -> Layout:
    """A bipartite layout on n >= 81 squares with at least 4n - 8 ceil(sqrt n) + 4 edges."""
    if n < 81:
        raise ValueError("the dense bipartite construction needs n >= 81")
    k = math.isqrt(n)
    return _grow(lattice_block(DENSE_BIPARTITE_BASIS, k), DENSE_BIPARTITE_BASIS, k, n - k * k, 4, True)


def degree_multiset(g: Graph) -> dict:
    out: dict = {}
    for v in g.vertices:
        d = g.degree(v)
        out[d] = out.get(d, 0) + 1
    return dict(sorted(out.items()))


def expected_dense_multiset(k: int) -> dict:
    """Degree counts of the k x k dense block (k >= 8)."""
    return {4: 4, 6: 4, 7: 4 * (k - 3), 10: 4, 11: 4 * (k - 4), 12: (k - 4) ** 2}
