"""Labeled simple graphs, tree predicates and small combinatorial helpers."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence


def label_key(v):
    """Sort key that orders ints numerically and everything else as text."""
    if isinstance(v, bool):
        return (1, str(v))
    if isinstance(v, int):
        return (0, v, "")
    return (1, 0, str(v))


def edge(u, v) -> frozenset:
    if u == v:
        raise ValueError(f"self-loop at {u!r}")
    return frozenset((u, v))


def edge_tuple(e) -> tuple:
    """An edge as a sorted pair."""
    u, v = sorted(e, key=label_key)
    return u, v


@dataclass(frozen=True)
class Graph:
    vertices: frozenset = frozenset()
    edges: frozenset = frozenset()
    _adj: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        verts = frozenset(self.vertices)
        edges = frozenset(frozenset(e) for e in self.edges)
        adj = {v: set() for v in verts}
        for e in edges:
            if len(e) != 2:
                raise ValueError(f"not a simple edge: {set(e)}")
            u, v = tuple(e)
            if u not in adj or v not in adj:
                raise ValueError(f"edge {set(e)} has an endpoint outside the vertex set")
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "_adj", adj)

    @classmethod
    def from_edges(cls, edges: Iterable, vertices: Iterable = ()) -> "Graph":
        es = [edge(u, v) for u, v in edges]
        verts = set(vertices)
        for e in es:
            verts |= e
        return cls(frozenset(verts), frozenset(es))

    def neighbors(self, v) -> set:
        return self._adj[v]

    def degree(self, v) -> int:
        return len(self._adj[v])

    def has_edge(self, u, v) -> bool:
        return v in self._adj.get(u, ())

    def sorted_vertices(self) -> list:
        return sorted(self.vertices, key=label_key)

    def sorted_edges(self) -> list[tuple]:
        return sorted((edge_tuple(e) for e in self.edges), key=lambda p: (label_key(p[0]), label_key(p[1])))

    def subgraph(self, edges: Iterable) -> "Graph":
        """Spanning subgraph on the same vertices with the given edges."""
        return Graph(self.vertices, frozenset(frozenset(e) for e in edges))

    def induced(self, verts: Iterable) -> "Graph":
        vs = frozenset(verts)
        return Graph(vs, frozenset(e for e in self.edges if e <= vs))

    def relabel(self, mapping) -> "Graph":
        return Graph(
            frozenset(mapping[v] for v in self.vertices),
            frozenset(frozenset(mapping[u] for u in e) for e in self.edges),
        )

    def __len__(self):
        return len(self.vertices)


def complete_graph(n: int, start: int = 1) -> Graph:
    vs = range(start, start + n)
    return Graph.from_edges(combinations(vs, 2), vs)


def cycle_graph(n: int, start: int = 1) -> Graph:
    vs = list(range(start, start + n))
    return Graph.from_edges(zip(vs, vs[1:] + vs[:1]), vs)


def path_graph(n: int, start: int = 1) -> Graph:
    vs = list(range(start, start + n))
    return Graph.from_edges(zip(vs, vs[1:]), vs)


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph.from_edges(((0, i) for i in range(1, leaves + 1)), [0])


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n} on ``("a", i)`` / ``("b", j)`` style labels ``a1.. b1..``."""
    left = [f"a{i}" for i in range(1, m + 1)]
    right = [f"b{j}" for j in range(1, n + 1)]
    return Graph.from_edges(((u, v) for u in left for v in right), left + right)


# ---------------------------------------------------------------------------
# traversal


def components(g: Graph, vertices: Iterable | None = None) -> list[list]:
    """Connected components, each listed in BFS order from its least vertex."""
    pool = g.sorted_vertices() if vertices is None else sorted(vertices, key=label_key)
    seen = set()
    comps = []
    for s in pool:
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in sorted(g.neighbors(u), key=label_key):
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(comp)
    return comps


def tree_path(g: Graph, u, v) -> list:
    """The vertex sequence of the unique u-v path in a forest (or [] if none)."""
    parent = {u: None}
    queue = deque([u])
    while queue:
        a = queue.popleft()
        if a == v:
            break
        for w in g.neighbors(a):
            if w not in parent:
                parent[w] = a
                queue.append(w)
    if v not in parent:
        return []
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    return path[::-1]


def is_forest(g: Graph) -> bool:
    return len(g.edges) == len(g.vertices) - len(components(g))


def is_tree(g: Graph) -> bool:
    return len(g.vertices) > 0 and len(g.edges) == len(g.vertices) - 1 and len(components(g)) == 1


def bfs_order(g: Graph, root) -> tuple[list, dict]:
    """BFS numbering from ``root`` (neighbours in label order) and parent map."""
    order = [root]
    parent = {root: None}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in sorted(g.neighbors(u), key=label_key):
            if w not in parent:
                parent[w] = u
                order.append(w)
                queue.append(w)
    return order, parent


def bipartition(g: Graph):
    """A 2-colouring ``(side0, side1)`` or None if g has an odd cycle."""
    colour = {}
    for comp in components(g):
        colour[comp[0]] = 0
        queue = deque([comp[0]])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w not in colour:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
    return (
        frozenset(v for v, c in colour.items() if c == 0),
        frozenset(v for v, c in colour.items() if c == 1),
    )


def bridges(g: Graph) -> set:
    """Bridge edges, by iterative low-link DFS."""
    disc, low = {}, {}
    out = set()
    counter = 0
    for s in g.sorted_vertices():
        if s in disc:
            continue
        disc[s] = low[s] = counter
        counter += 1
        stack = [(s, None, iter(g.neighbors(s)))]
        while stack:
            u, par, it = stack[-1]
            advanced = False
            for w in it:
                if w == par:
                    continue
                if w in disc:
                    low[u] = min(low[u], disc[w])
                else:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, u, iter(g.neighbors(w))))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                if par is not None:
                    low[par] = min(low[par], low[u])
                    if low[u] > disc[par]:
                        out.add(frozenset((par, u)))
    return out


def vertices_on_cycles(g: Graph) -> set:
    """Vertices incident to at least one non-bridge edge."""
    br = bridges(g)
    return {v for e in g.edges if e not in br for v in e}


def find_clique(g: Graph, size: int):
    """Some clique of ``size`` vertices (sorted list), or None."""
    order = g.sorted_vertices()
    rank = {v: k for k, v in enumerate(order)}

    def extend(clique, candidates):
        if len(clique) == size:
            return clique
        for k, v in enumerate(candidates):
            if len(clique) + len(candidates) - k < size:
                return None
            found = extend(clique + [v], [w for w in candidates[k + 1:] if w in g.neighbors(v)])
            if found:
                return found
        return None

    for v in order:
        if g.degree(v) < size - 1:
            continue
        later = [w for w in order if rank[w] > rank[v] and w in g.neighbors(v) and g.degree(w) >= size - 1]
        found = extend([v], later)
        if found:
            return found
    return None


def contains_k5(g: Graph) -> bool:
    return find_clique(g, 5) is not None


@dataclass(frozen=True)
class GraphPredicates:
    is_tree: bool
    is_forest: bool
    max_degree: int
    is_bipartite: bool
    bipartition: tuple | None
    vertices_on_cycles: frozenset
    contains_k5: bool


def graph_predicates(g: Graph) -> GraphPredicates:
    bp = bipartition(g)
    return GraphPredicates(
        is_tree=is_tree(g),
        is_forest=is_forest(g),
        max_degree=max((g.degree(v) for v in g.vertices), default=0),
        is_bipartite=bp is not None,
        bipartition=bp,
        vertices_on_cycles=frozenset(vertices_on_cycles(g)),
        contains_k5=contains_k5(g),
    )


# ---------------------------------------------------------------------------
# caterpillars


@dataclass(frozen=True)
class SpineCertificate:
    """One component of a subdivided caterpillar forest.

    ``spine`` is a maximal path containing every degree-3 vertex; ``legs``
    maps each off-spine edge to ``"leg"``.
    """

    spine: tuple
    spine_edges: frozenset
    leg_edges: frozenset


def _comp_spine(g: Graph, comp: list):
    if len(comp) == 1:
        return SpineCertificate((comp[0],), frozenset(), frozenset())
    deg3 = {v for v in comp if g.degree(v) == 3}
    leaves = sorted((v for v in comp if g.degree(v) == 1), key=label_key)
    best = None
    for a, b in combinations(leaves, 2):
        path = tree_path(g, a, b)
        if deg3 <= set(path):
            best = path
            break
    if best is None:
        return None
    spine_edges = frozenset(frozenset(p) for p in zip(best, best[1:]))
    comp_set = set(comp)
    comp_edges = {e for e in g.edges if e <= comp_set}
    return SpineCertificate(tuple(best), spine_edges, frozenset(comp_edges - spine_edges))


def caterpillar_certificate(g: Graph):
    """Spine certificates for a subdivided caterpillar forest with max degree 3.

    Returns a list with one :class:`SpineCertificate` per component, or None
    if ``g`` is not such a forest.  The test used is: forest, max degree at
    most 3, and the degree-3 vertices of each component lie on one path.
    Among the admissible leaf-to-leaf spines the lexicographically least
    endpoint pair is chosen.
    """
    if not is_forest(g):
        return None
    if any(g.degree(v) > 3 for v in g.vertices):
        return None
    certs = []
    for comp in components(g):
        cert = _comp_spine(g, comp)
        if cert is None:
            return None
        certs.append(cert)
    return certs


def is_subdivided_caterpillar_forest_deg3(g: Graph) -> bool:
    return caterpillar_certificate(g) is not None


# ---------------------------------------------------------------------------
# monotone subsequences


@dataclass(frozen=True)
class MonotoneWitness:
    indices: tuple
    direction: str  # "nondecreasing" | "nonincreasing"

    def __len__(self):
        return len(self.indices)


def longest_monotone_subsequence(seq: Sequence) -> MonotoneWitness:
    """A longest nondecreasing or nonincreasing subsequence, by O(n^2) DP.

    Ties between the two directions go to nondecreasing.
    """
    best = MonotoneWitness((), "nondecreasing")
    for direction, ok in (
        ("nondecreasing", lambda a, b: a <= b),
        ("nonincreasing", lambda a, b: a >= b),
    ):
        n = len(seq)
        length = [1] * n
        prev = [-1] * n
        for j in range(n):
            for i in range(j):
                if ok(seq[i], seq[j]) and length[i] + 1 > length[j]:
                    length[j] = length[i] + 1
                    prev[j] = i
        if n and max(length) > len(best):
            j = length.index(max(length))
            idx = []
            while j != -1:
                idx.append(j)
                j = prev[j]
            best = MonotoneWitness(tuple(reversed(idx)), direction)
    return best
