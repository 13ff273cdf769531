"""Edge 2-colourings of trees and graphs into caterpillar or linear forests.

Both searches are exhaustive backtracking with incremental pruning.  The
worst case is exponential in the number of edges; no polynomial method for
either question is known, so these are meant for desk-scale inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from urvkit.graph import (
    Graph,
    bfs_order,
    caterpillar_certificate,
    components,
    edge_tuple,
    is_forest,
    is_tree,
    label_key,
    tree_path,
)

F1, F2 = "f1", "f2"
SPINE, LEG = "spine", "leg"
URVG, WEAK_ONLY = "URVG", "WeakOnly"


class DecompositionError(ValueError):
    pass


@dataclass(frozen=True)
class Decomposition:
    """Edges split into f1 (realised horizontally) and f2 (vertically).

    ``roles`` tags every edge ``"spine"`` or ``"leg"``.
    """

    f1_edges: frozenset
    f2_edges: frozenset
    roles: dict = field(compare=False)

    def colour(self, e) -> str:
        e = frozenset(e)
        if e in self.f1_edges:
            return F1
        if e in self.f2_edges:
            return F2
        raise KeyError(f"edge {set(e)} is not in the decomposition")

    def role(self, e) -> str:
        return self.roles[frozenset(e)]

    def swapped(self) -> "Decomposition":
        return Decomposition(self.f2_edges, self.f1_edges, dict(self.roles))


def roles_from_certificates(g: Graph, f1: Iterable, f2: Iterable) -> dict | None:
    roles = {}
    for part in (f1, f2):
        certs = caterpillar_certificate(g.subgraph(part))
        if certs is None:
            return None
        for cert in certs:
            roles.update({e: SPINE for e in cert.spine_edges})
            roles.update({e: LEG for e in cert.leg_edges})
    return roles


def _spine_ok(sub: Graph, comp: list, spine_edges: set) -> bool:
    """Spine edges of one component form a leaf-to-leaf path through every
    degree-3 vertex."""
    comp_set = set(comp)
    edges = {e for e in spine_edges if e <= comp_set}
    if len(comp) == 1:
        return not edges
    if not edges:
        return False
    deg = {}
    for e in edges:
        for v in e:
            deg[v] = deg.get(v, 0) + 1
    ends = [v for v, d in deg.items() if d == 1]
    if any(d > 2 for d in deg.values()) or len(ends) != 2:
        return False
    path = tree_path(sub.subgraph(edges), ends[0], ends[1])
    if len(path) != len(edges) + 1:
        return False
    if any(sub.degree(v) != 1 for v in ends):
        return False
    deg3 = {v for v in comp if sub.degree(v) == 3}
    return deg3 <= set(path)


def check_decomposition(g: Graph, d: Decomposition) -> list[str]:
    """Independent certificate checker; returns a list of problems."""
    problems = []
    if d.f1_edges & d.f2_edges:
        problems.append("f1 and f2 share edges")
    if (d.f1_edges | d.f2_edges) != g.edges:
        problems.append("f1 and f2 do not cover exactly the edges of the graph")
    if set(d.roles) != set(g.edges) or any(r not in (SPINE, LEG) for r in d.roles.values()):
        problems.append("every edge needs exactly one role, spine or leg")
        return problems
    for name, part in ((F1, d.f1_edges), (F2, d.f2_edges)):
        sub = g.subgraph(part & g.edges)
        if caterpillar_certificate(sub) is None:
            problems.append(f"{name} is not a subdivided caterpillar forest of max degree 3")
            continue
        spine = {e for e in part if d.roles.get(e) == SPINE}
        for comp in components(sub):
            if not _spine_ok(sub, comp, spine):
                problems.append(f"{name} component at {comp[0]!r} has inconsistent spine/leg roles")
    return problems


# ---------------------------------------------------------------------------
# trees


def tree_edge_order(t: Graph) -> list[frozenset]:
    """Tree edges in BFS order from the least vertex."""
    root = t.sorted_vertices()[0]
    order, parent = bfs_order(t, root)
    return [frozenset((parent[v], v)) for v in order[1:]]


def _deg3_on_path(adj: dict, comp: set, deg3: set) -> bool:
    """Whether ``deg3`` lies on one path of the tree ``comp`` (adjacency ``adj``)."""
    if len(deg3) <= 2:
        return True
    alive = set(comp)
    deg = {v: len(adj[v] & alive) for v in alive}
    stack = [v for v in alive if deg[v] <= 1 and v not in deg3]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for w in adj[v]:
            if w in alive:
                deg[w] -= 1
                if deg[w] <= 1 and w not in deg3:
                    stack.append(w)
    return all(deg[v] <= 2 for v in alive)


class _CaterpillarSearch:
    def __init__(self, t: Graph):
        self.t = t
        self.order = tree_edge_order(t)
        self.adj = {F1: {v: set() for v in t.vertices}, F2: {v: set() for v in t.vertices}}
        self.nodes = 0

    def _component(self, colour, v) -> set:
        adj = self.adj[colour]
        seen = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    def _feasible(self, colour, u, v) -> bool:
        adj = self.adj[colour]
        if len(adj[u]) >= 3 or len(adj[v]) >= 3:
            return False
        adj[u].add(v)
        adj[v].add(u)
        comp = self._component(colour, u)
        deg3 = {w for w in comp if len(adj[w]) == 3}
        ok = _deg3_on_path(adj, comp, deg3)
        adj[u].discard(v)
        adj[v].discard(u)
        return ok

    def run(self, prefix=()):
        colours = []
        for k, c in enumerate(prefix):
            u, v = tuple(self.order[k])
            if not self._feasible(c, u, v):
                return None
            self.adj[c][u].add(v)
            self.adj[c][v].add(u)
            colours.append(c)
        return self._extend(colours)

    def _extend(self, colours):
        self.nodes += 1
        k = len(colours)
        if k == len(self.order):
            return list(colours)
        u, v = tuple(self.order[k])
        choices = (F1,) if k == 0 else (F1, F2)
        for c in choices:
            if not self._feasible(c, u, v):
                continue
            adj = self.adj[c]
            adj[u].add(v)
            adj[v].add(u)
            colours.append(c)
            found = self._extend(colours)
            if found is not None:
                return found
            colours.pop()
            adj[u].discard(v)
            adj[v].discard(u)
        return None


def tree_caterpillar_bipartition(t: Graph, prefix: tuple = ()) -> Decomposition | None:
    """Split a tree into two subdivided caterpillar forests of max degree 3.

    Returns the first decomposition in the canonical search order (edges in
    BFS order, f1 tried before f2, first edge fixed to f1), or None when no
    2-colouring works.  ``prefix`` pins the colours of the first edges so the
    search space can be partitioned across workers.
    """
    if not is_tree(t):
        raise DecompositionError("input is not a tree")
    if any(t.degree(v) > 6 for v in t.vertices):
        return None
    if not t.edges:
        return Decomposition(frozenset(), frozenset(), {})
    search = _CaterpillarSearch(t)
    colours = search.run(tuple(prefix))
    if colours is None:
        return None
    f1 = frozenset(e for e, c in zip(search.order, colours) if c == F1)
    f2 = frozenset(e for e, c in zip(search.order, colours) if c == F2)
    roles = roles_from_certificates(t, f1, f2)
    return Decomposition(f1, f2, roles)


@dataclass(frozen=True)
class TreeClass:
    kind: str  # URVG | WeakOnly
    decomposition: Decomposition | None = None


def classify_tree(t: Graph) -> TreeClass:
    """URVG when a caterpillar bipartition exists, otherwise WeakOnly.

    Every tree has a weak layout, so there is no third outcome.
    """
    d = tree_caterpillar_bipartition(t)
    if d is None:
        return TreeClass(WEAK_ONLY)
    return TreeClass(URVG, d)


# ---------------------------------------------------------------------------
# linear forests


def _connected(adj, u, v) -> bool:
    seen = {u}
    stack = [u]
    while stack:
        a = stack.pop()
        if a == v:
            return True
        for w in adj[a]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return False


def linear_forest_bipartition(g: Graph):
    """Split the edges of ``g`` into two linear forests (unions of paths).

    Returns ``(f1, f2)`` as frozensets of edges, or None when the linear
    arboricity exceeds 2.  Exhaustive; exponential in the worst case.
    """
    if any(g.degree(v) > 4 for v in g.vertices):
        return None
    order = [frozenset(p) for p in g.sorted_edges()]
    adj = {F1: {v: set() for v in g.vertices}, F2: {v: set() for v in g.vertices}}
    colours = []

    def extend(k):
        if k == len(order):
            return True
        u, v = edge_tuple(order[k])
        for c in (F1,) if k == 0 else (F1, F2):
            a = adj[c]
            if len(a[u]) >= 2 or len(a[v]) >= 2 or _connected(a, u, v):
                continue
            a[u].add(v)
            a[v].add(u)
            colours.append(c)
            if extend(k + 1):
                return True
            colours.pop()
            a[u].discard(v)
            a[v].discard(u)
        return False

    if not extend(0):
        return None
    f1 = frozenset(e for e, c in zip(order, colours) if c == F1)
    f2 = frozenset(e for e, c in zip(order, colours) if c == F2)
    return f1, f2


def is_linear_forest(g: Graph) -> bool:
    return is_forest(g) and all(g.degree(v) <= 2 for v in g.vertices)


def linear_roles(f1, f2) -> dict:
    """Roles for a linear-forest decomposition: every edge is a spine edge."""
    return {e: SPINE for e in (*f1, *f2)}


def sort_edges(edges) -> list[tuple]:
    return sorted((edge_tuple(e) for e in edges), key=lambda p: (label_key(p[0]), label_key(p[1])))
