"""Acceptance criteria, one test each, with a PASS/FAIL line per criterion.

Run ``pytest tests/test_acceptance.py`` (lines appear in the summary) or
``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import os
import random
import sys
import time
from fractions import Fraction as F

import networkx as nx
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from oracles import brute_force_tree_is_urvg, has_k5, ray_visibility_edges  # noqa: E402
from urvkit.audit import audit_layout, grid_search, refute_k5_random  # noqa: E402
from urvkit.decompose import URVG, WEAK_ONLY, check_decomposition, classify_tree, linear_forest_bipartition  # noqa: E402
from urvkit.extremal import (  # noqa: E402
    bounds,
    c_closed,
    degree_multiset,
    dense_bipartite_target,
    dense_target,
    edges_closed,
    expected_dense_multiset,
    gen_dense_bipartite_layout,
    gen_dense_layout,
    gen_TBs,
    gen_TRs,
    level_counts,
    urvg_bound,
)
from urvkit.geometry import (  # noqa: E402
    Layout,
    extract_graph,
    insert_horizontal_band,
    reflect_x,
    reflect_y,
    split_xy,
    translate,
)
from urvkit.graph import (  # noqa: E402
    Graph,
    bipartition,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    star_graph,
    vertices_on_cycles,
)
from urvkit.synth import (  # noqa: E402
    classify_kmn,
    layout_complete,
    layout_cycle,
    layout_kmn,
    layout_linear_arb2,
    layout_tree,
    layout_tree_weak,
)

SEED = 20240601


def _fail(msg):
    raise AssertionError(msg)


def _check(cond, msg):
    if not cond:
        _fail(msg)


# ---------------------------------------------------------------------------


def criterion_1():
    k4 = layout_complete(4)
    _check(extract_graph(k4) == complete_graph(4), "K4 does not round-trip")
    _check(layout_complete(5) is None, "n=5 was not refused")
    t = time.perf_counter()
    out = grid_search(complete_graph(5), F(1, 2), 6, workers=4)
    dt = time.perf_counter() - t
    _check(out.exhausted, "grid search found a K5 layout")
    _check(dt <= 300, f"K5 grid search took {dt:.0f}s")
    ref = refute_k5_random(100_000, seed=SEED)
    _check(ref.k5_found == 0 and ref.monotone_triangles == 0, f"refuter: {ref.to_json()}")
    return f"K4 ok, K5 refused, grid exhausted in {dt:.1f}s ({out.nodes} nodes), 1e5 random trials with 0 K5"


def _all_trees(max_n=10):
    yield Graph(frozenset({0}), frozenset())
    for n in range(2, max_n + 1):
        for t in nx.nonisomorphic_trees(n):
            yield Graph.from_edges(t.edges(), t.nodes())


def criterion_2():
    t0 = time.perf_counter()
    count = urvg = 0
    for t in _all_trees():
        count += 1
        cls = classify_tree(t)
        _check((cls.kind == URVG) == brute_force_tree_is_urvg(t), f"classification disagrees on {sorted(map(tuple, t.edges))}")
        if cls.kind == URVG:
            urvg += 1
            d = cls.decomposition
            lay = layout_tree(t, d)
            s = split_xy(lay)
            _check(extract_graph(lay) == t, "tree round trip failed")
            _check(s.gx.edges == d.f1_edges and s.gy.edges == d.f2_edges, "split differs from decomposition")
    _check(count == 201, f"enumerated {count} trees")
    _check(classify_tree(star_graph(6)).kind == URVG, "K_{1,6} not URVG")
    _check(classify_tree(star_graph(7)).kind == WEAK_ONLY, "K_{1,7} not WeakOnly")
    dt = time.perf_counter() - t0
    _check(dt <= 120, f"took {dt:.0f}s")
    return f"{count} trees, {urvg} URVG all round-trip, oracle agrees, {dt:.1f}s"


def _random_tree(rng, n):
    return Graph.from_edges(((rng.randrange(k), k) for k in range(1, n)), range(n))


def criterion_3():
    rng = random.Random(SEED)
    for _ in range(100):
        t = _random_tree(rng, rng.randint(1, 15))
        lay = layout_tree_weak(t)
        _check(t.edges <= extract_graph(lay).edges, "weak layout lost a tree edge")
    return "100 random trees (<= 15 vertices) contained in their weak layouts"


def criterion_4():
    for n in range(3, 21):
        g = cycle_graph(n)
        parts = linear_forest_bipartition(g)
        _check(parts is not None, f"C_{n} has no linear forest split")
        lay = layout_linear_arb2(g, *parts)
        s = split_xy(lay)
        _check(extract_graph(lay) == g and s.gx.edges == parts[0] and s.gy.edges == parts[1], f"C_{n} failed")
        _check(extract_graph(layout_cycle(n)) == g, f"layout_cycle({n}) failed")
    k4 = complete_graph(4)
    parts = linear_forest_bipartition(k4)
    _check(extract_graph(layout_linear_arb2(k4, *parts)) == k4, "K4 failed")
    return "C_3..C_20 and K4 split into two linear forests and round-trip exactly"


KMN_URVG = {(m, n) for m in (1, 2) for n in range(m, 7)} | {(3, 3), (3, 4)}
KMN_WEAK = {(m, n) for m in (1, 2) for n in range(7, 9)}


def criterion_5():
    for m in range(1, 9):
        for n in range(m, 9):
            want = "URVG" if (m, n) in KMN_URVG else "WeakOnly" if (m, n) in KMN_WEAK else "NotWeak"
            _check(classify_kmn(m, n) == want, f"classify_kmn({m},{n})")
    for m, n in [(m, n) for m in (1, 2) for n in range(1, 7) if m <= n] + [(3, 3), (3, 4)]:
        lay = layout_kmn(m, n, "strong")
        _check(lay is not None and extract_graph(lay) == complete_bipartite(m, n), f"strong K_{m},{n}")
    for m, n in [(2, n) for n in range(2, 21)] + [(3, 3), (3, 4)]:
        lay = layout_kmn(m, n, "weak")
        _check(complete_bipartite(m, n).edges <= extract_graph(lay).edges, f"weak K_{m},{n}")
    times = []
    for m, n in ((4, 4), (3, 5)):
        t = time.perf_counter()
        out = grid_search(complete_bipartite(m, n), F(1, 2), 6)
        times.append(time.perf_counter() - t)
        _check(out.exhausted, f"grid search found K_{m},{n}")
    return f"table matches for m<=n<=8, strong/weak layouts verify, K44/K35 exhausted ({times[0]:.0f}s, {times[1]:.0f}s)"


def criterion_6():
    t0 = time.perf_counter()
    for s, e in zip(range(1, 7), (3, 8, 15, 24, 35, 48)):
        _check(len(gen_TBs(s).graph.edges) == e == s * s + 2 * s, f"T_B,{s}")
    for s in range(1, 6):
        tree, d = gen_TRs(s)
        _check(tree.level_sizes() == list(level_counts(s).c), f"T_R,{s} level sizes")
        _check(check_decomposition(tree.graph, d) == [], f"T_R,{s} decomposition")
    lc = level_counts(20)
    _check(lc.a[0] == 4 and lc.c[:3] == (6, 28, 128), "recurrence values")
    for k in range(1, 21):
        _check(abs(c_closed(k) - lc.c[k - 1]) / lc.c[k - 1] <= 1e-9, f"c_closed({k})")
        total = sum(lc.c[:k])
        _check(abs(edges_closed(k) - total) / total <= 1e-9, f"edges_closed({k})")
    tree, d = gen_TRs(2)
    _check(len(tree.graph) == 35, "T_R,2 size")
    lay = layout_tree(tree.graph, d, root=tree.root)
    s = split_xy(lay)
    _check(extract_graph(lay) == tree.graph and s.gx.edges == d.f1_edges and s.gy.edges == d.f2_edges, "T_R,2 round trip")
    dt = time.perf_counter() - t0
    _check(dt <= 60, f"took {dt:.0f}s")
    return f"T_B edges, T_R levels, closed forms within 1e-9, T_R,2 (35 squares) round-trips, {dt:.1f}s"


def criterion_7():
    b64, b81 = bounds(64), bounds(81)
    _check((b64.urvg_bound, b64.dense_target) == (353, 294), "bounds(64)")
    _check((b81.bipartite_bound, b81.dense_bipartite_target) == (311, 256), "bounds(81)")
    notes = []
    for n in (64, 70, 81, 100):
        g = extract_graph(gen_dense_layout(n))
        m = len(g.edges)
        _check(dense_target(n) <= m <= urvg_bound(n), f"dense n={n} has {m} edges")
        notes.append(f"{n}:{m}")
    g = extract_graph(gen_dense_layout(64))
    _check(sum(g.degree(v) for v in g.vertices) == 588, "degree sum at n=64")
    multiset = "multiset ok" if degree_multiset(g) == expected_dense_multiset(8) else "WARNING multiset differs"
    g = extract_graph(gen_dense_bipartite_layout(81))
    m = len(g.edges)
    _check(bipartition(g) is not None and 256 <= m <= 311, f"dense bipartite n=81 has {m} edges")
    _check(dense_bipartite_target(81) == 256, "target")
    return f"bounds exact; dense edges {' '.join(notes)}; degree sum 588, {multiset}; bipartite 81 -> {m}"


def _random_layout(rng, n, den=6, box=5):
    pts: list = []
    while len(pts) < n:
        pts = []
        for _ in range(20 * n):
            x, y = rng.randint(0, box * den), rng.randint(0, box * den)
            if all(abs(x - a) >= den or abs(y - b) >= den for a, b in pts):
                pts.append((x, y))
                if len(pts) == n:
                    break
    return Layout.from_coords({k: (F(x, den), F(y, den)) for k, (x, y) in enumerate(pts)})


def criterion_8(cases=1000):
    rng = random.Random(SEED)
    for _ in range(cases):
        lay = _random_layout(rng, rng.randint(2, 12))
        s = split_xy(lay)
        g = extract_graph(lay)
        hor, ver = ray_visibility_edges(lay.coords())
        _check(s.gx.edges == hor and s.gy.edges == ver, "extraction disagrees with ray oracle")
        _check(not (s.gx.edges & s.gy.edges) and g.edges == s.gx.edges | s.gy.edges, "split union/disjointness")
        dx, dy = F(rng.randint(-30, 30), 7), F(rng.randint(-30, 30), 5)
        _check(extract_graph(translate(lay, dx, dy)) == g, "translation changed the graph")
        _check(extract_graph(reflect_x(lay)) == g and extract_graph(reflect_y(lay)) == g, "reflection changed the graph")
        cut = F(rng.randint(0, 30), 6)
        if not any(sq.y < cut < sq.y + 1 for sq in lay):
            _check(extract_graph(insert_horizontal_band(lay, cut)) == g, "band insertion changed the graph")
        _check(not has_k5(g), "K5 in an extracted graph")
        cyc = vertices_on_cycles(g)
        _check(all(v in cyc for v in g.vertices if g.degree(v) >= 7), "degree >= 7 vertex off every cycle")
        _check(audit_layout(lay).ok, "random layout failed audit")
    produced = [layout_complete(4), layout_cycle(12), gen_dense_layout(64), gen_dense_bipartite_layout(81)]
    produced += [layout_kmn(2, 6), layout_kmn(3, 4), layout_kmn(2, 12, "weak")]
    for _ in range(60):
        t = _random_tree(rng, rng.randint(1, 14))
        produced.append(layout_tree_weak(t))
        cls = classify_tree(t)
        if cls.decomposition is not None:
            produced.append(layout_tree(t, cls.decomposition))
    bad = [k for k, lay in enumerate(produced) if not audit_layout(lay).ok]
    _check(not bad, f"toolkit layouts failing audit: {bad}")
    return f"{cases} random layouts satisfy every invariant; {len(produced)} toolkit layouts audit clean"


CRITERIA = [
    (1, "complete graphs", criterion_1),
    (2, "trees", criterion_2),
    (3, "weak trees", criterion_3),
    (4, "linear arboricity 2", criterion_4),
    (5, "complete bipartite", criterion_5),
    (6, "extremal trees", criterion_6),
    (7, "edge bounds", criterion_7),
    (8, "universal invariants", criterion_8),
]


def _run(number, name, fn):
    try:
        detail = fn()
        return True, f"criterion {number} ({name}): PASS - {detail}"
    except AssertionError as exc:
        return False, f"criterion {number} ({name}): FAIL - {exc}"


@pytest.mark.parametrize("number,name,fn", CRITERIA, ids=[f"c{n}" for n, _, _ in CRITERIA])
def test_criterion(number, name, fn):
    from conftest import ACCEPTANCE_LINES

    ok, line = _run(number, name, fn)
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


if __name__ == "__main__":
    results = [_run(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
