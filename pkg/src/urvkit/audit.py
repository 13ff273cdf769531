"""Consistency audits, a seeded K5 refuter and a quantized exhaustive search.

The search is evidence, not proof: it only visits layouts whose corners lie
on a finite grid, so a continuous placement could still exist in principle.
"""

from __future__ import annotations

import json
import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from multiprocessing import get_context

from urvkit.extremal import bipartite_bound, urvg_bound
from urvkit.geometry import (
    Layout,
    _uncovered,
    split_xy,
    sweep_pairs,
    validate_layout,
)
from urvkit.graph import (
    Graph,
    bipartition,
    find_clique,
    label_key,
    longest_monotone_subsequence,
    vertices_on_cycles,
)

PASS, FAIL, INFO = "pass", "fail", "info"
K5_CHECK_LIMIT = 12


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    detail: str


@dataclass(frozen=True)
class AuditReport:
    n: int
    edges: int
    checks: tuple

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if c.status == FAIL]

    def to_json(self) -> str:
        return json.dumps(
            {
                "format": 1,
                "n": self.n,
                "edges": self.edges,
                "ok": self.ok,
                "checks": [{"name": c.name, "status": c.status, "detail": c.detail} for c in self.checks],
            },
            sort_keys=True,
        )

    def table(self) -> str:
        width = max((len(c.name) for c in self.checks), default=0)
        lines = [f"squares {self.n}, edges {self.edges}"]
        lines += [f"{c.status.upper():<4}  {c.name:<{width}}  {c.detail}" for c in self.checks]
        return "\n".join(lines)


def audit_layout(layout: Layout) -> AuditReport:
    """Run every universal check on ``layout``; the input is not modified."""
    n = len(layout)
    bad = validate_layout(layout)
    if bad:
        checks = (Check("disjoint interiors", FAIL, f"overlapping pair {bad[0]!r} ({len(bad)} total)"),)
        return AuditReport(n, 0, checks)
    checks = [Check("disjoint interiors", PASS, "no overlapping interiors")]
    split = split_xy(layout)
    g = Graph(split.gx.vertices, split.gx.edges | split.gy.edges)
    m = len(g.edges)

    if n:
        cap = urvg_bound(n)
        status = PASS if m <= cap else FAIL
        checks.append(Check("edge bound", status, f"{m} edges, bound 6n-4ceil(sqrt n)+1 = {cap}"))

    if n >= 7 and bipartition(g) is not None:
        cap = bipartite_bound(n)
        status = PASS if m <= cap else FAIL
        checks.append(Check("bipartite edge bound", status, f"{m} edges, bound 4n-2ceil(sqrt n)+5 = {cap}"))
    else:
        checks.append(Check("bipartite edge bound", INFO, "not applicable (non-bipartite or n < 7)"))

    if n <= K5_CHECK_LIMIT:
        clique = find_clique(g, 5)
        if clique is None:
            checks.append(Check("K5-free", PASS, "no 5-clique"))
        else:
            checks.append(Check("K5-free", FAIL, f"5-clique on {clique!r}"))
    else:
        checks.append(Check("K5-free", INFO, f"skipped for n > {K5_CHECK_LIMIT}"))

    on_cycle = vertices_on_cycles(g)
    heavy = sorted((v for v in g.vertices if g.degree(v) >= 7), key=label_key)
    off = [v for v in heavy if v not in on_cycle]
    if off:
        checks.append(Check("degree >= 7 on a cycle", FAIL, f"vertex {off[0]!r} has degree {g.degree(off[0])} and lies on no cycle"))
    else:
        checks.append(Check("degree >= 7 on a cycle", PASS, f"{len(heavy)} vertices of degree >= 7"))

    both = split.gx.edges & split.gy.edges
    if both:
        checks.append(Check("split consistency", FAIL, f"edge {sorted(next(iter(both)), key=label_key)!r} in gx and gy"))
    else:
        checks.append(Check("split consistency", PASS, f"gx {len(split.gx.edges)} + gy {len(split.gy.edges)} = {m}"))
    return AuditReport(n, m, tuple(checks))


# ---------------------------------------------------------------------------
# K5 refuter

DENOMINATOR = 60


@dataclass(frozen=True)
class RefuterReport:
    trials: int
    seed: int
    k5_found: int
    monotone_triangles: int
    max_edges: int
    edge_histogram: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.k5_found == 0 and self.monotone_triangles == 0

    def to_json(self) -> str:
        d = {
            "format": 1,
            "trials": self.trials,
            "seed": self.seed,
            "k5_found": self.k5_found,
            "monotone_triangles": self.monotone_triangles,
            "max_edges": self.max_edges,
            "edge_histogram": {str(k): v for k, v in sorted(self.edge_histogram.items())},
        }
        return json.dumps(d, sort_keys=True)


def _integer_edges(xs, ys, side) -> set:
    edges = {frozenset(p) for p in sweep_pairs(xs, ys, side)}
    edges |= {frozenset(p) for p in sweep_pairs(ys, xs, side)}
    return edges


def _random_positions(rng: random.Random, count: int, box: int, side: int):
    """Rejection-sample ``count`` disjoint squares with corners in [0, box]^2."""
    hi = box * side
    while True:
        pts: list = []
        for _ in range(100 * count):
            x, y = rng.randint(0, hi), rng.randint(0, hi)
            if all(abs(x - a) >= side or abs(y - b) >= side for a, b in pts):
                pts.append((x, y))
                if len(pts) == count:
                    return pts
        # early squares can leave no room; start over


def refute_k5_random(trials: int, seed: int | None = None, box: int = 3) -> RefuterReport:
    """Sample random 5-square layouts and look for K5.

    Coordinates are multiples of 1/60 in ``[0, box]``.  For every sample the
    y-coordinates, read in x order, contain a monotone triple; the check
    confirms that those three squares never form a triangle.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if seed is None:
        seed = int(os.environ.get("URVKIT_SEED", "0"))
    rng = random.Random(seed)
    side = DENOMINATOR
    k5 = bad_triples = 0
    hist: dict = {}
    for _ in range(trials):
        pts = sorted(_random_positions(rng, 5, box, side))
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        edges = _integer_edges(xs, ys, side)
        hist[len(edges)] = hist.get(len(edges), 0) + 1
        if len(edges) == 10:
            k5 += 1
        triple = longest_monotone_subsequence(ys).indices[:3]
        if all(frozenset(p) in edges for p in ((triple[0], triple[1]), (triple[1], triple[2]), (triple[0], triple[2]))):
            bad_triples += 1
    return RefuterReport(trials, seed, k5, bad_triples, max(hist), hist)


# ---------------------------------------------------------------------------
# grid search

STEPS = (Fraction(1), Fraction(1, 2), Fraction(1, 3))
MAX_SEARCH_VERTICES = 8
STRONG, WEAK = "strong", "weak"


@dataclass(frozen=True)
class SearchConfig:
    step: Fraction = Fraction(1, 2)
    extent: int = 6
    workers: int = 1
    mode: str = STRONG

    def __post_init__(self):
        object.__setattr__(self, "step", Fraction(self.step))
        if self.step not in STEPS:
            raise ValueError("step must be one of 1, 1/2, 1/3")
        if not 1 <= self.extent <= 8:
            raise ValueError("extent must be between 1 and 8")
        if self.workers < 1:
            raise ValueError("workers must be positive")
        if self.mode not in (STRONG, WEAK):
            raise ValueError(f"unknown mode {self.mode!r}")


@dataclass(frozen=True)
class SearchOutcome:
    layout: Layout | None
    nodes: int
    config: SearchConfig

    @property
    def exhausted(self) -> bool:
        return self.layout is None


def _sees(a, b, placed, side) -> bool:
    (xa, ya), (xb, yb) = a, b
    if abs(ya - yb) < side:
        if xa > xb:
            xa, ya, xb, yb = xb, yb, xa, ya
        if xb < xa + side:
            return False
        lo, hi = max(ya, yb), min(ya, yb) + side
        blockers = [(y, y + side) for x, y in placed if xa < x < xb and y < hi and y + side > lo]
    elif abs(xa - xb) < side:
        if ya > yb:
            xa, ya, xb, yb = xb, yb, xa, ya
        lo, hi = max(xa, xb), min(xa, xb) + side
        blockers = [(x, x + side) for x, y in placed if ya < y < yb and x < hi and x + side > lo]
    else:
        return False
    return _uncovered(lo, hi, blockers)


def _twin_classes(g: Graph) -> dict:
    """Map each vertex to its predecessor in its twin class (or None)."""
    prev, last = {}, {}
    for v in g.sorted_vertices():
        key = None
        for w in last:
            if g.neighbors(v) - {w} == g.neighbors(w) - {v}:
                key = w
                break
        prev[v] = last.get(key) if key is not None else None
        last[key if key is not None else v] = v
    return prev


def _placement_order(g: Graph) -> list:
    """Greedy order: next is the vertex with most placed neighbours, ties by label."""
    order: list = []
    rest = g.sorted_vertices()
    while rest:
        placed = set(order)
        best = max(rest, key=lambda v: len(g.neighbors(v) & placed))
        order.append(best)
        rest.remove(best)
    return order


class _Search:
    def __init__(self, target: Graph, cfg: SearchConfig):
        self.cfg = cfg
        self.side = int(1 / cfg.step)
        self.span = cfg.extent * self.side
        order = _placement_order(target)
        self.order = order
        self.rank = {v: k for k, v in enumerate(order)}
        self.target = target
        twin = _twin_classes(target)
        self.twin_prev = {v: (self.rank[twin[v]] if twin[v] is not None else None) for v in order}
        self.back = [[self.rank[w] for w in target.neighbors(v) if self.rank[w] < k] for k, v in enumerate(order)]
        self.required = [(self.rank[u], self.rank[v]) for u, v in map(tuple, target.edges)]
        self.nodes = 0
        grid = range(-self.span, self.span + 1)
        self.grid = [(x, y) for x in grid for y in grid]

    def _candidates(self, k, pos):
        side = self.side
        xs = [p[0] for p in pos]
        ys = [p[1] for p in pos]
        x_lo, x_hi = max(xs) - self.span, min(xs) + self.span
        y_lo, y_hi = max(ys) - self.span, min(ys) + self.span
        floor = None
        if self.twin_prev[self.order[k]] is not None:
            floor = pos[self.twin_prev[self.order[k]]]
        out = []
        for c in self.grid:
            x, y = c
            if not (x_lo <= x <= x_hi and y_lo <= y <= y_hi):
                continue
            if floor is not None and c <= floor:
                continue
            if any(abs(x - a) < side and abs(y - b) < side for a, b in pos):
                continue
            out.append(c)
        return out

    def _consistent(self, pos) -> bool:
        k = len(pos) - 1
        new = pos[k]
        for j in self.back[k]:
            if not _sees(new, pos[j], pos, self.side):
                return False
        # the new square may block an earlier required visibility
        for i, j in self.required:
            if i < k and j < k and not _sees(pos[i], pos[j], pos, self.side):
                return False
        return True

    def _accept(self, pos) -> bool:
        if self.cfg.mode == WEAK:
            return True
        xs = [p[0] for p in pos]
        ys = [p[1] for p in pos]
        want = {frozenset(e) for e in self.required}
        return _integer_edges(xs, ys, self.side) == want

    def root_options(self):
        if len(self.order) < 2:
            return [None]
        return self._candidates(1, [(0, 0)])

    def run(self, second):
        pos = [(0, 0)]
        if second is not None:
            pos.append(second)
            if not self._consistent(pos):
                return None
        return self._extend(pos)

    def _extend(self, pos):
        self.nodes += 1
        k = len(pos)
        if k == len(self.order):
            return list(pos) if self._accept(pos) else None
        for c in self._candidates(k, pos):
            pos.append(c)
            if self._consistent(pos):
                found = self._extend(pos)
                if found is not None:
                    return found
            pos.pop()
        return None

    def to_layout(self, pos) -> Layout:
        step = self.cfg.step
        return Layout.from_coords({v: (p[0] * step, p[1] * step) for v, p in zip(self.order, pos)})


def _worker(args):
    target, cfg, chunk = args
    s = _Search(target, cfg)
    for idx, second in chunk:
        found = s.run(second)
        if found is not None:
            return idx, found, s.nodes
    return None, None, s.nodes


def grid_search(target: Graph, step=Fraction(1, 2), extent: int = 6, workers: int = 1, mode: str = STRONG) -> SearchOutcome:
    """Exhaustive search for a layout of ``target`` on a quantized grid.

    Corners are multiples of ``step``; the first vertex is pinned at the
    origin and the corner bounding box is at most ``extent`` on each side,
    which covers every grid layout in ``[0, extent]^2`` up to translation.
    Vertices with identical neighbourhoods are placed in increasing corner
    order.  A partial placement is abandoned once a required visibility is
    missing, since adding squares never creates visibility.  Strong mode
    demands the exact graph at the leaves; weak mode accepts supersets.

    The first placement of the second vertex splits the work; workers
    return their first hit and the lowest split index wins, so the answer
    does not depend on ``workers``.
    """
    cfg = SearchConfig(Fraction(step), extent, workers, mode)
    if not 1 <= len(target) <= MAX_SEARCH_VERTICES:
        raise ValueError(f"grid search supports 1 to {MAX_SEARCH_VERTICES} vertices")
    s = _Search(target, cfg)
    options = list(enumerate(s.root_options()))
    if cfg.workers == 1:
        _, found, nodes = _worker((target, cfg, options))
        layout = s.to_layout(found) if found is not None else None
        return SearchOutcome(layout, nodes, cfg)
    chunks = [options[w:: cfg.workers] for w in range(cfg.workers)]
    with get_context("fork").Pool(cfg.workers) as pool:
        results = pool.map(_worker, [(target, cfg, c) for c in chunks])
    nodes = sum(r[2] for r in results)
    hits = [(idx, found) for idx, found, _ in results if idx is not None]
    layout = s.to_layout(min(hits)[1]) if hits else None
    return SearchOutcome(layout, nodes, cfg)
