"""Exact unit-square layouts and their visibility graphs.

Every coordinate is a :class:`fractions.Fraction`.  A square is closed and
identified by its bottom-left corner; the side length is always 1.

Two squares see each other along an axis when a band of positive width
joins their facing sides without meeting the interior of a third square.
Squares that touch along a side are adjacent (the band has zero length but
positive width); squares that meet only at a corner are not.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Iterator, Mapping

from urvkit.graph import Graph, label_key

HORIZONTAL = "horizontal"
VERTICAL = "vertical"


class LayoutError(ValueError):
    """Raised for layouts that violate a precondition."""


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to an exact Fraction.

    Floats are refused: geometry decisions here are equality-sensitive.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact coordinate {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(c in text for c in ".eE"):
            raise ValueError(f"not a rational literal: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot use {type(value).__name__} as a coordinate")


@dataclass(frozen=True)
class Square:
    id: object
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", as_rational(self.x))
        object.__setattr__(self, "y", as_rational(self.y))

    @property
    def x_segment(self):
        """The segment X_v: the left side of the square."""
        return (self.x, self.y), (self.x, self.y + 1)

    @property
    def y_segment(self):
        """The segment Y_v: the bottom side of the square."""
        return (self.x, self.y), (self.x + 1, self.y)


@dataclass(frozen=True)
class Layout:
    squares: tuple[Square, ...] = ()
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        squares = tuple(self.squares)
        index = {}
        for k, sq in enumerate(squares):
            if sq.id in index:
                raise LayoutError(f"duplicate square id {sq.id!r}")
            index[sq.id] = k
        object.__setattr__(self, "squares", squares)
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_coords(cls, coords: Mapping | Iterable) -> "Layout":
        """Build from ``{id: (x, y)}`` or an iterable of ``(id, x, y)``."""
        items = coords.items() if isinstance(coords, Mapping) else ((i, (x, y)) for i, x, y in coords)
        return cls(tuple(Square(i, x, y) for i, (x, y) in items))

    def __len__(self):
        return len(self.squares)

    def __iter__(self) -> Iterator[Square]:
        return iter(self.squares)

    def __contains__(self, vid):
        return vid in self._index

    def __getitem__(self, vid) -> Square:
        try:
            return self.squares[self._index[vid]]
        except KeyError:
            raise LayoutError(f"unknown square id {vid!r}") from None

    @property
    def ids(self):
        return [sq.id for sq in self.squares]

    def coords(self) -> dict:
        return {sq.id: (sq.x, sq.y) for sq in self.squares}

    def with_square(self, vid, x, y) -> "Layout":
        return Layout(self.squares + (Square(vid, x, y),))

    def without(self, ids: Iterable) -> "Layout":
        drop = set(ids)
        return Layout(tuple(sq for sq in self.squares if sq.id not in drop))

    def extents(self):
        """``(x_min, x_max, y_min, y_max)`` over the bottom-left corners."""
        if not self.squares:
            raise LayoutError("empty layout has no extents")
        xs = [sq.x for sq in self.squares]
        ys = [sq.y for sq in self.squares]
        return min(xs), max(xs), min(ys), max(ys)

    def canonical(self) -> "Layout":
        """Squares sorted by id, for order-insensitive comparison."""
        return Layout(tuple(sorted(self.squares, key=lambda s: label_key(s.id))))


# ---------------------------------------------------------------------------
# validity


def interiors_overlap(a: Square, b: Square) -> bool:
    return abs(a.x - b.x) < 1 and abs(a.y - b.y) < 1


def overlapping_pairs(layout: Layout) -> list[tuple]:
    """All id pairs whose interiors intersect (sorted sweep over x)."""
    order = sorted(layout.squares, key=lambda s: s.x)
    bad = []
    for k, a in enumerate(order):
        for b in order[k + 1:]:
            if b.x - a.x >= 1:
                break
            if abs(a.y - b.y) < 1:
                bad.append((a.id, b.id))
    return bad


def validate_layout(layout: Layout) -> list[tuple]:
    """Return the offending pairs; an empty list means the layout is valid."""
    return overlapping_pairs(layout)


def require_valid(layout: Layout) -> None:
    bad = validate_layout(layout)
    if bad:
        raise LayoutError(f"squares with overlapping interiors: {bad[:5]}")


# ---------------------------------------------------------------------------
# pairwise visibility (direct definition)


def _uncovered(lo, hi, intervals) -> bool:
    """True if some open subinterval of (lo, hi) of positive length avoids
    the union of the closed ``intervals``."""
    cursor = lo
    for s, e in sorted(intervals):
        if s > cursor:
            return True
        if e > cursor:
            cursor = e
        if cursor >= hi:
            return False
    return cursor < hi


def visible(layout: Layout, a, b, axis: str = HORIZONTAL) -> bool:
    """Decide whether squares ``a`` and ``b`` see each other along ``axis``.

    This is the literal definition (collect blockers, merge, look for a
    gap).  :func:`extract_graph` uses a faster sweep and is tested against
    this function.
    """
    if a == b:
        raise LayoutError("a square does not see itself")
    sa, sb = layout[a], layout[b]
    if axis == VERTICAL:
        sa, sb = Square(sa.id, sa.y, sa.x), Square(sb.id, sb.y, sb.x)
        others = [Square(s.id, s.y, s.x) for s in layout.squares]
    elif axis == HORIZONTAL:
        others = layout.squares
    else:
        raise ValueError(f"unknown axis {axis!r}")
    if sa.x > sb.x:
        sa, sb = sb, sa
    if sb.x < sa.x + 1:
        return False
    lo, hi = max(sa.y, sb.y), min(sa.y, sb.y) + 1
    if lo >= hi:
        return False
    blockers = [
        (c.y, c.y + 1)
        for c in others
        if c.id != sa.id and c.id != sb.id and sa.x < c.x < sb.x
    ]
    return _uncovered(lo, hi, blockers)


# ---------------------------------------------------------------------------
# extraction by sweep


def _scaled(layout: Layout):
    """Integer coordinates with a common denominator; side length = scale."""
    scale = 1
    for sq in layout.squares:
        scale = lcm(scale, sq.x.denominator, sq.y.denominator)
    xs = [int(sq.x * scale) for sq in layout.squares]
    ys = [int(sq.y * scale) for sq in layout.squares]
    return xs, ys, scale


def sweep_pairs(xs, ys, side) -> list[tuple[int, int]]:
    """Index pairs ``(i, j)`` with ``i`` seeing ``j`` horizontally, ``x_i < x_j``.

    Works on any exact ordered numbers.  For each square the squares to its
    right are scanned in x order while the covered part of its row span is
    maintained as merged closed intervals; the scan stops once the span is
    fully covered.
    """
    n = len(xs)
    order = sorted(range(n), key=xs.__getitem__)
    pairs = []
    for pos, a in enumerate(order):
        xa, lo = xs[a], ys[a]
        hi = lo + side
        covered: list[list] = []
        k = pos + 1
        while k < n and xs[order[k]] == xa:
            k += 1
        while k < n:
            xg = xs[order[k]]
            group = []
            while k < n and xs[order[k]] == xg:
                group.append(order[k])
                k += 1
            hits = [c for c in group if ys[c] < hi and ys[c] + side > lo]
            if not hits:
                continue
            if xg >= xa + side:
                for c in hits:
                    s, e = max(lo, ys[c]), min(hi, ys[c] + side)
                    if not any(cs <= s and ce >= e for cs, ce in covered):
                        pairs.append((a, c))
            for c in hits:
                _add_interval(covered, ys[c], ys[c] + side)
            if covered and covered[0][0] <= lo and covered[0][1] >= hi:
                break
    return pairs


def _add_interval(merged: list, s, e) -> None:
    """Insert closed [s, e] into a sorted list of disjoint closed intervals."""
    out = []
    placed = False
    for cs, ce in merged:
        if ce < s:
            out.append([cs, ce])
        elif cs > e:
            if not placed:
                out.append([s, e])
                placed = True
            out.append([cs, ce])
        else:
            s, e = min(s, cs), max(e, ce)
    if not placed:
        out.append([s, e])
        out.sort()
    merged[:] = out


def _axis_edges(layout: Layout, axis: str) -> set:
    xs, ys, scale = _scaled(layout)
    if axis == VERTICAL:
        xs, ys = ys, xs
    ids = layout.ids
    return {frozenset((ids[i], ids[j])) for i, j in sweep_pairs(xs, ys, scale)}


@dataclass(frozen=True)
class SplitGraphs:
    gx: Graph
    gy: Graph


def split_xy(layout: Layout) -> SplitGraphs:
    """Horizontal-visibility graph ``gx`` and vertical-visibility graph ``gy``."""
    require_valid(layout)
    verts = frozenset(layout.ids)
    return SplitGraphs(
        Graph(verts, frozenset(_axis_edges(layout, HORIZONTAL))),
        Graph(verts, frozenset(_axis_edges(layout, VERTICAL))),
    )


def extract_graph(layout: Layout) -> Graph:
    """The unit rectangle visibility graph induced by ``layout``."""
    split = split_xy(layout)
    return Graph(split.gx.vertices, split.gx.edges | split.gy.edges)


def neighbours(layout: Layout, vid) -> dict:
    """``{other_id: axis}`` for every square seen by ``vid``."""
    layout[vid]
    out = {}
    for axis in (HORIZONTAL, VERTICAL):
        for other in layout.squares:
            if other.id != vid and visible(layout, vid, other.id, axis):
                out[other.id] = axis
    return out


# ---------------------------------------------------------------------------
# surgery and rigid motions


def insert_horizontal_band(layout: Layout, t) -> Layout:
    """Open an empty corridor of height 1 above the line ``y = t``.

    Squares with ``y >= t`` move up by 1.  The line must not cross any
    square's interior; the visibility graph is then unchanged.
    """
    t = as_rational(t)
    pierced = [sq.id for sq in layout.squares if sq.y < t < sq.y + 1]
    if pierced:
        raise LayoutError(f"line y={t} crosses the interior of {pierced}")
    return Layout(tuple(Square(sq.id, sq.x, sq.y + 1) if sq.y >= t else sq for sq in layout.squares))


def insert_vertical_band(layout: Layout, t) -> Layout:
    """Transposed :func:`insert_horizontal_band`: squares with ``x >= t`` move right."""
    t = as_rational(t)
    pierced = [sq.id for sq in layout.squares if sq.x < t < sq.x + 1]
    if pierced:
        raise LayoutError(f"line x={t} crosses the interior of {pierced}")
    return Layout(tuple(Square(sq.id, sq.x + 1, sq.y) if sq.x >= t else sq for sq in layout.squares))


def translate(layout: Layout, dx, dy) -> Layout:
    dx, dy = as_rational(dx), as_rational(dy)
    return Layout(tuple(Square(s.id, s.x + dx, s.y + dy) for s in layout.squares))


def reflect_x(layout: Layout) -> Layout:
    """Mirror in the line x = 0, re-anchoring corners (x -> -x - 1)."""
    return Layout(tuple(Square(s.id, -s.x - 1, s.y) for s in layout.squares))


def reflect_y(layout: Layout) -> Layout:
    return Layout(tuple(Square(s.id, s.x, -s.y - 1) for s in layout.squares))


def transpose(layout: Layout) -> Layout:
    return Layout(tuple(Square(s.id, s.y, s.x) for s in layout.squares))


def transform(layout: Layout, op: str, *args) -> Layout:
    ops = {
        "translate": translate,
        "reflect_x": reflect_x,
        "reflect_y": reflect_y,
        "transpose": transpose,
    }
    try:
        fn = ops[op]
    except KeyError:
        raise ValueError(f"unknown transform {op!r}") from None
    return fn(layout, *args)
