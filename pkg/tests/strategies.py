"""Hypothesis strategies for exact layouts and small trees."""

from fractions import Fraction

from hypothesis import strategies as st

from urvkit.geometry import Layout
from urvkit.graph import Graph


@st.composite
def layouts(draw, min_size=1, max_size=12, denominator=6, box=4):
    """Valid layouts with corners on the 1/denominator grid in [0, box]^2."""
    hi = box * denominator
    n = draw(st.integers(min_size, max_size))
    pts = []
    cells = draw(st.lists(st.tuples(st.integers(0, hi), st.integers(0, hi)), min_size=n, max_size=4 * n))
    for x, y in cells:
        if all(abs(x - a) >= denominator or abs(y - b) >= denominator for a, b in pts):
            pts.append((x, y))
        if len(pts) == n:
            break
    return Layout.from_coords({k: (Fraction(x, denominator), Fraction(y, denominator)) for k, (x, y) in enumerate(pts)})


@st.composite
def trees(draw, min_size=1, max_size=15):
    """Random labelled trees via random parent pointers."""
    n = draw(st.integers(min_size, max_size))
    parents = [draw(st.integers(0, k - 1)) for k in range(1, n)]
    return Graph.from_edges(((p, k) for k, p in enumerate(parents, start=1)), range(n))
