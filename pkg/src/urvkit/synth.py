"""Constructive layouts: trees (strong and weak), cycles, complete graphs,
complete bipartite graphs and graphs of linear arboricity 2.

Every strong construction is checked against :func:`extract_graph` before
it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from urvkit.decompose import (
    F1,
    F2,
    LEG,
    SPINE,
    Decomposition,
    check_decomposition,
    is_linear_forest,
)
from urvkit.geometry import (
    HORIZONTAL,
    VERTICAL,
    Layout,
    extract_graph,
    neighbours,
    split_xy,
    validate_layout,
)
from urvkit.graph import (
    Graph,
    bfs_order,
    complete_bipartite,
    complete_graph,
    components,
    cycle_graph,
    is_tree,
    label_key,
)

TWO_THIRDS = Fraction(2, 3)
STAGGER = Fraction(2, 3)


class SynthesisError(RuntimeError):
    """A construction produced something other than the requested graph.

    Never expected on valid input; the message names the offending square.
    """


class NotRealizable(ValueError):
    """The requested graph has no layout of the requested kind."""


# ---------------------------------------------------------------------------
# trees


@dataclass
class LayoutExtents:
    x_m: Fraction
    x_M: Fraction
    y_m: Fraction
    y_M: Fraction


class _TreePlacer:
    """Breadth-first placement of a tree from a caterpillar decomposition.

    Positions live in ``self.pos``.  Work on the vertical forest is done in
    a transposed frame so that one routine handles both axes.
    """

    def __init__(self, t: Graph, d: Decomposition, root, check: bool):
        self.t = t
        self.d = d
        self.root = root
        self.check = check
        self.pos: dict = {}
        self.transposed = False
        self.parent_edge: dict = {}  # vertex -> (colour, role) of the edge to its parent

    # frame helpers -----------------------------------------------------
    def _flip(self):
        self.pos = {v: (y, x) for v, (x, y) in self.pos.items()}
        self.transposed = not self.transposed

    def extents(self) -> LayoutExtents:
        xs = [p[0] for p in self.pos.values()]
        ys = [p[1] for p in self.pos.values()]
        return LayoutExtents(min(xs), max(xs), min(ys), max(ys))

    def _band(self, t):
        """Insert a height-1 corridor above the line y = t (current frame)."""
        pierced = [v for v, (x, y) in self.pos.items() if y < t < y + 1]
        if pierced:
            raise SynthesisError(f"band line y={t} pierces {pierced} while placing children")
        self.pos = {v: (x, y + 1 if y >= t else y) for v, (x, y) in self.pos.items()}

    def _put(self, child, parent, x, y, flush: bool):
        self.pos[child] = (x, y)
        if not self.check:
            return
        layout = self.layout()
        bad = validate_layout(layout)
        if bad:
            raise SynthesisError(f"placing {child!r} overlaps {bad}")
        seen = neighbours(layout, child)
        want_axis = HORIZONTAL if not self.transposed else VERTICAL
        if seen != {parent: want_axis}:
            raise SynthesisError(
                f"square {child!r} at {(x, y)} sees {seen}, expected only its parent {parent!r}"
            )
        px, py = self.pos[parent]
        if (py == y) != flush:
            raise SynthesisError(f"square {child!r} breaks the flush/protruding discipline")

    def layout(self) -> Layout:
        if self.transposed:
            return Layout.from_coords({v: (y, x) for v, (x, y) in self.pos.items()})
        return Layout.from_coords(self.pos)

    # placement ---------------------------------------------------------
    def run(self) -> Layout:
        order, parent = bfs_order(self.t, self.root)
        self.pos[self.root] = (Fraction(0), Fraction(0))
        for v in order:
            kids = [w for w in sorted(self.t.neighbors(v), key=label_key) if parent.get(w) == v]
            for colour in (F1, F2):
                mine = [w for w in kids if self.d.colour((v, w)) == colour]
                if not mine:
                    continue
                legs = [w for w in mine if self.d.role((v, w)) == LEG]
                spines = [w for w in mine if self.d.role((v, w)) == SPINE]
                if colour == F2:
                    self._flip()
                self._children(v, parent[v], legs, spines, colour)
                if colour == F2:
                    self._flip()
                for w in mine:
                    self.parent_edge[w] = (colour, self.d.role((v, w)))
        return self.layout()

    def _children(self, i, p, legs, spines, colour):
        """Place the children of ``i`` joined by edges of ``colour``; the
        current frame makes these horizontal visibilities."""
        if len(legs) > 2 or len(spines) > 2 or (spines and len(legs) > 1):
            raise SynthesisError(f"vertex {i!r} has too many {colour} edges for a caterpillar")
        xi, yi = self.pos[i]
        pe = self.parent_edge.get(i)

        if i == self.root:
            # fixed offsets around a lone root
            leg_spots = [(xi - 2, yi), (xi + 2, yi)]
            for w, (x, y) in zip(legs, leg_spots):
                self._put(w, i, x, y, flush=True)
            spine_spots = [(xi + 2, yi + TWO_THIRDS), (xi + 4, yi - TWO_THIRDS)]
            for w, (x, y) in zip(spines, spine_spots):
                self._put(w, i, x, y, flush=False)
            return

        if pe is not None and pe[0] == colour:
            px, py = self.pos[p]
            p_side = -1 if px < xi else 1
            if pe[1] == SPINE:
                if len(spines) > 1 or len(legs) > 1:
                    raise SynthesisError(f"vertex {i!r} continues a spine with too many children")
                for w in legs:
                    self._flush(w, i, -p_side)
                for w in spines:
                    # same side as the parent, protruding away from it
                    self._protrude(w, i, p_side, up=py < self.pos[i][1])
            else:
                for w in legs:
                    self._flush(w, i, -p_side)
                for w, up in zip(spines, (True, False)):
                    self._protrude(w, i, -p_side, up=up)
            return

        # parent seen along the other axis: both sides of this axis are open
        if spines:
            for w in legs:
                self._flush(w, i, 1)
            for w, up in zip(spines, (True, False)):
                self._protrude(w, i, -1, up=up)
        else:
            for w, side in zip(legs, (-1, 1)):
                self._flush(w, i, side)

    def _flush(self, w, i, side):
        ext = self.extents()
        _, yi = self.pos[i]
        x = ext.x_M + 2 if side > 0 else ext.x_m - 2
        self._put(w, i, x, yi, flush=True)

    def _protrude(self, w, i, side, up: bool):
        _, yi = self.pos[i]
        self._band(yi + 1 if up else yi)
        _, yi = self.pos[i]
        ext = self.extents()
        x = ext.x_M + 2 if side > 0 else ext.x_m - 2
        y = yi + TWO_THIRDS if up else yi - TWO_THIRDS
        self._put(w, i, x, y, flush=False)


def layout_tree(t: Graph, d: Decomposition, root=None, check: bool = True) -> Layout:
    """Layout of a tree whose horizontal visibilities are exactly ``d.f1_edges``
    and vertical visibilities exactly ``d.f2_edges``.

    Leg edges become flush visibilities and spine edges protruding ones.
    Children are placed beyond the current extents; a protruding child first
    gets a free corridor by band insertion above or below its parent.  With
    ``check`` every placement is verified to see only its parent.
    """
    if not is_tree(t):
        raise ValueError("input is not a tree")
    problems = check_decomposition(t, d)
    if problems:
        raise ValueError("invalid decomposition: " + "; ".join(problems))
    if root is None:
        root = t.sorted_vertices()[0]
    layout = _TreePlacer(t, d, root, check).run()
    split = split_xy(layout)
    if split.gx.edges != d.f1_edges or split.gy.edges != d.f2_edges:
        raise SynthesisError("tree layout does not reproduce the decomposition")
    return layout


def layout_tree_weak(t: Graph, root=None) -> Layout:
    """Weak layout of any tree: every tree edge is a vertical visibility.

    Child ``i`` of ``p`` (``k`` children) sits at ``(x_p + 1 - i/k, y_p - i)``
    after a corridor of height ``k`` is opened below ``p``.  Extra
    visibilities between siblings are expected.
    """
    if not is_tree(t):
        raise ValueError("input is not a tree")
    if root is None:
        root = t.sorted_vertices()[0]
    order, parent = bfs_order(t, root)
    pos = {root: (Fraction(0), Fraction(0))}
    for p in order:
        kids = [w for w in sorted(t.neighbors(p), key=label_key) if parent.get(w) == p]
        k = len(kids)
        if not k:
            continue
        xp, yp = pos[p]
        pos = {v: (x, y - k if y < yp else y) for v, (x, y) in pos.items()}
        for i, w in enumerate(kids, start=1):
            pos[w] = (xp + 1 - Fraction(i, k), yp - i)
    layout = Layout.from_coords(pos)
    g = extract_graph(layout)
    missing = t.edges - g.edges
    if missing:
        raise SynthesisError(f"weak tree layout lost edges {[tuple(e) for e in missing][:5]}")
    return layout


# ---------------------------------------------------------------------------
# linear arboricity 2


def _path_order(comp: list, sub: Graph) -> list:
    ends = [v for v in comp if sub.degree(v) <= 1]
    start = min(ends, key=label_key)
    order = [start]
    prev = None
    while True:
        nxt = [w for w in sub.neighbors(order[-1]) if w != prev]
        if not nxt:
            return order
        prev = order[-1]
        order.append(nxt[0])


def _interval_starts(g: Graph, forest, gap) -> dict:
    sub = g.subgraph(forest)
    starts = {}
    cursor = Fraction(0)
    for comp in components(sub):
        for k, v in enumerate(_path_order(comp, sub)):
            starts[v] = cursor + k * STAGGER
        cursor += (len(comp) - 1) * STAGGER + 1 + gap
    return starts


def layout_linear_arb2(g: Graph, f1, f2) -> Layout:
    """Product-of-intervals layout for two linear forests.

    ``f1`` paths fix the y-intervals (consecutive path vertices overlap by
    1 - 2/3, so f1 edges are horizontal visibilities) and ``f2`` paths fix
    the x-intervals.
    """
    f1, f2 = frozenset(map(frozenset, f1)), frozenset(map(frozenset, f2))
    if f1 & f2 or (f1 | f2) != g.edges:
        raise ValueError("f1 and f2 must partition the edges")
    for name, part in (("f1", f1), ("f2", f2)):
        if not is_linear_forest(g.subgraph(part)):
            raise ValueError(f"{name} is not a union of paths")
    for gap in (Fraction(2), Fraction(4)):
        ys = _interval_starts(g, f1, gap)
        xs = _interval_starts(g, f2, gap)
        layout = Layout.from_coords({v: (xs[v], ys[v]) for v in g.sorted_vertices()})
        if validate_layout(layout):
            continue
        split = split_xy(layout)
        if split.gx.edges == f1 and split.gy.edges == f2:
            return layout
    raise SynthesisError("interval product did not reproduce the linear forests")


# ---------------------------------------------------------------------------
# cycles and complete graphs


def layout_cycle(n: int) -> Layout:
    """C_n on vertices 1..n: the path 1..n as a horizontal staircase closed
    by a vertical visibility between n and 1."""
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    g = cycle_graph(n)
    closing = frozenset((n, 1))
    return layout_linear_arb2(g, g.edges - {closing}, {closing})


# Pinwheel K4 (checked by extraction in the tests).
K4_LAYOUT = {
    1: (Fraction(4, 3), Fraction(0)),
    2: (Fraction(0), Fraction(2, 3)),
    3: (Fraction(2), Fraction(4, 3)),
    4: (Fraction(2, 3), Fraction(2)),
}


def layout_complete(n: int) -> Layout | None:
    """A layout of K_n on vertices 1..n, or None when n >= 5."""
    if n < 1:
        raise ValueError("n must be positive")
    if n >= 5:
        return None
    layout = Layout.from_coords({v: K4_LAYOUT[v] for v in range(1, n + 1)})
    if extract_graph(layout) != complete_graph(n):
        raise SynthesisError("K_n layout failed verification")
    return layout


# ---------------------------------------------------------------------------
# complete bipartite graphs

STRONG, WEAK = "strong", "weak"
NOT_WEAK = "NotWeak"


def classify_kmn(m: int, n: int) -> str:
    """``"URVG"``, ``"WeakOnly"`` or ``"NotWeak"`` for K_{m,n}, m <= n."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if m > n:
        raise ValueError("normalise so that m <= n")
    if (m <= 2 and n <= 6) or (m == 3 and n <= 4):
        return "URVG"
    if m <= 2 or (m <= 3 and n <= 4):
        return "WeakOnly"
    return NOT_WEAK


def _q(*vals):
    return tuple(Fraction(v) for v in vals)


# Maximal strong layouts; smaller cases come from deleting squares.
# Labels: a1..am on the small side, b1..bn on the large side.
KMN_LAYOUTS: dict = {
    (1, 6): {
        "a1": _q(0, 0),
        "b1": _q("-9/2", "-1/2"), "b2": _q("-7/2", "1/2"), "b3": _q("-1/2", "-9/2"),
        "b4": _q(0, "3/2"), "b5": _q("1/2", "-7/2"), "b6": _q("3/2", 0),
    },
    (2, 6): {
        "a1": _q(0, 0), "a2": _q(1, -1),
        "b1": _q("-7/2", "-1/2"), "b2": _q("-1/2", "-3/2"), "b3": _q("1/2", "-9/2"),
        "b4": _q("1/2", "3/2"), "b5": _q("3/2", "1/2"), "b6": _q("5/2", "-1/2"),
    },
    (3, 4): {
        "a1": _q(0, 0), "a2": _q(1, -1), "a3": _q(2, -2),
        "b1": _q("-1/2", "-3/2"), "b2": _q("1/2", "-5/2"), "b3": _q("3/2", "1/2"), "b4": _q("5/2", "-1/2"),
    },
}


def _kmn_relabel(layout: Layout, m: int, n: int, keep_a, keep_b) -> Layout:
    mapping = {a: f"a{k}" for k, a in enumerate(keep_a, start=1)}
    mapping.update({b: f"b{k}" for k, b in enumerate(keep_b, start=1)})
    return Layout.from_coords({mapping[s.id]: (s.x, s.y) for s in layout if s.id in mapping})


def _from_maximal(m: int, n: int, base: Layout, big_m: int, big_n: int, strong: bool):
    """Delete squares from a maximal layout until K_{m,n} remains; the first
    subset (in lexicographic order) that verifies wins."""
    target = complete_bipartite(m, n)
    a_ids = [f"a{k}" for k in range(1, big_m + 1)]
    b_ids = [f"b{k}" for k in range(1, big_n + 1)]
    for keep_a in combinations(a_ids, m):
        for keep_b in combinations(b_ids, n):
            cand = _kmn_relabel(base, m, n, keep_a, keep_b)
            g = extract_graph(cand)
            if (g == target) if strong else target.edges <= g.edges:
                return cand
    return None


def weak_k2n_layout(n: int) -> Layout:
    """A staircase of n squares, each seeing ``a1`` to its left through a
    1/(n+1) slice and ``a2`` to its right through another."""
    step = Fraction(1, n + 1)
    pos = {"a1": (Fraction(0), Fraction(0)), "a2": (Fraction(n + 1), Fraction(-1))}
    for i in range(1, n + 1):
        pos[f"b{i}"] = (Fraction(i), -1 + i * step)
    return Layout.from_coords(pos)


def layout_kmn(m: int, n: int, mode: str = STRONG) -> Layout | None:
    """Layout of K_{m,n} (``m <= n``), or None when none exists in ``mode``.

    Strong mode returns a layout whose graph is exactly K_{m,n}; weak mode
    returns one whose graph contains it.
    """
    kind = classify_kmn(m, n)
    if mode == STRONG and kind != "URVG":
        return None
    if mode == WEAK and kind == NOT_WEAK:
        return None
    if mode not in (STRONG, WEAK):
        raise ValueError(f"unknown mode {mode!r}")
    target = complete_bipartite(m, n)
    if kind == "URVG":
        if m == 1:
            base, bm, bn = Layout.from_coords(KMN_LAYOUTS[(1, 6)]), 1, 6
        elif m == 2:
            base, bm, bn = Layout.from_coords(KMN_LAYOUTS[(2, 6)]), 2, 6
        else:
            base, bm, bn = Layout.from_coords(KMN_LAYOUTS[(3, 4)]), 3, 4
        layout = _from_maximal(m, n, base, bm, bn, strong=True)
    elif m <= 2:
        layout = weak_k2n_layout(n)
        if m == 1:
            layout = layout.without(["a2"])
    else:
        layout = None
    if layout is None:
        raise SynthesisError(f"no stored layout reproduces K_{m},{n}")
    g = extract_graph(layout)
    ok = g == target if mode == STRONG else target.edges <= g.edges
    if not ok:
        raise SynthesisError(f"K_{m},{n} layout failed verification")
    return layout
