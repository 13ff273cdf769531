"""Text, DOT, JSON and SVG interchange formats.

Layout text: one square per line, ``id x y`` with integer or ``p/q``
coordinates.  Graph text: ``u v`` per edge, a lone ``id`` for an isolated
vertex.  Decomposition text: ``u v f1|f2 spine|leg``.  ``#`` starts a
comment and blank lines are skipped in every text format.
"""

from __future__ import annotations

import json
from fractions import Fraction
from xml.sax.saxutils import escape

from urvkit.decompose import F1, F2, LEG, SPINE, Decomposition
from urvkit.geometry import Layout, Square, split_xy
from urvkit.graph import Graph, edge_tuple, label_key

FORMAT_VERSION = 1


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None, source: str = "<input>"):
        self.line, self.column, self.source = line, column, source
        where = source if line is None else f"{source}:{line}:{column or 1}"
        super().__init__(f"{where}: {message}")


def parse_id(token: str):
    """Integer-looking ids become ints; anything else stays text."""
    try:
        return int(token)
    except ValueError:
        return token


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _tokens(text: str, source: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        toks, col = [], 0
        for part in body.split():
            col = body.index(part, col)
            toks.append((part, col + 1))
            col += len(part)
        yield lineno, toks


def _rational(tok: str, lineno: int, col: int, source: str) -> Fraction:
    if any(c in tok for c in ".eE"):
        raise FormatError(f"coordinate {tok!r} must be an integer or p/q", lineno, col, source)
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"bad coordinate {tok!r}", lineno, col, source) from None


def read_layout(text: str, source: str = "<input>") -> Layout:
    squares, seen = [], set()
    for lineno, toks in _tokens(text, source):
        if len(toks) != 3:
            col = toks[min(len(toks), 3) - 1][1] if len(toks) > 3 else 1
            raise FormatError(f"expected 'id x y', got {len(toks)} fields", lineno, col, source)
        (vid, _), (xs, xc), (ys, yc) = toks
        vid = parse_id(vid)
        if vid in seen:
            raise FormatError(f"duplicate id {vid!r}", lineno, 1, source)
        seen.add(vid)
        squares.append(Square(vid, _rational(xs, lineno, xc, source), _rational(ys, lineno, yc, source)))
    return Layout(tuple(squares))


def write_layout(layout: Layout, header: str | None = None) -> str:
    lines = [f"# {h}" for h in header.splitlines()] if header else []
    lines += [f"{s.id} {format_rational(s.x)} {format_rational(s.y)}" for s in layout]
    return "\n".join(lines) + "\n"


def read_graph(text: str, source: str = "<input>") -> Graph:
    verts, edges = set(), set()
    for lineno, toks in _tokens(text, source):
        if len(toks) == 1:
            verts.add(parse_id(toks[0][0]))
        elif len(toks) == 2:
            u, v = parse_id(toks[0][0]), parse_id(toks[1][0])
            if u == v:
                raise FormatError(f"self-loop at {u!r}", lineno, toks[1][1], source)
            verts |= {u, v}
            edges.add(frozenset((u, v)))
        else:
            raise FormatError(f"expected 'u v' or 'id', got {len(toks)} fields", lineno, toks[2][1], source)
    return Graph(frozenset(verts), frozenset(edges))


def write_graph(g: Graph) -> str:
    touched = {v for e in g.edges for v in e}
    lines = [str(v) for v in g.sorted_vertices() if v not in touched]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def read_decomposition(text: str, source: str = "<input>") -> tuple[Graph, Decomposition]:
    f1, f2, roles = set(), set(), {}
    for lineno, toks in _tokens(text, source):
        if len(toks) != 4:
            raise FormatError("expected 'u v f1|f2 spine|leg'", lineno, 1, source)
        u, v = parse_id(toks[0][0]), parse_id(toks[1][0])
        colour, role = toks[2][0], toks[3][0]
        if colour not in (F1, F2):
            raise FormatError(f"colour must be f1 or f2, got {colour!r}", lineno, toks[2][1], source)
        if role not in (SPINE, LEG):
            raise FormatError(f"role must be spine or leg, got {role!r}", lineno, toks[3][1], source)
        e = frozenset((u, v))
        (f1 if colour == F1 else f2).add(e)
        roles[e] = role
    g = Graph.from_edges([tuple(e) for e in f1 | f2])
    return g, Decomposition(frozenset(f1), frozenset(f2), roles)


def write_decomposition(d: Decomposition) -> str:
    rows = []
    for colour, part in ((F1, d.f1_edges), (F2, d.f2_edges)):
        for e in part:
            u, v = edge_tuple(e)
            rows.append(((label_key(u), label_key(v)), f"{u} {v} {colour} {d.roles[e]}"))
    return "\n".join(r for _, r in sorted(rows)) + "\n"


def _dot_id(v) -> str:
    text = str(v)
    return text if text.isidentifier() or text.lstrip("-").isdigit() else json.dumps(text)


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {_dot_id(v)};" for v in g.sorted_vertices()]
    lines += [f"  {_dot_id(u)} -- {_dot_id(v)};" for u, v in g.sorted_edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json(g: Graph, **extra) -> str:
    return json.dumps(
        {
            "format": FORMAT_VERSION,
            "vertices": [str(v) for v in g.sorted_vertices()],
            "edges": [[str(u), str(v)] for u, v in g.sorted_edges()],
            **extra,
        },
        sort_keys=True,
    )


def layout_to_json(layout: Layout) -> str:
    return json.dumps(
        {
            "format": FORMAT_VERSION,
            "squares": [{"id": str(s.id), "x": format_rational(s.x), "y": format_rational(s.y)} for s in layout],
        },
        sort_keys=True,
    )


def render_svg(layout: Layout, edges: bool = False, unit: int = 40, margin: float = 0.5) -> str:
    """SVG 1.1 drawing, one rectangle per square, optionally with the
    visibility segments overlaid (red horizontal, blue vertical).

    Screen y grows downward, so layout point (x, y) maps to (x, -y); the
    header comment records this.
    """
    if not len(layout):
        raise ValueError("nothing to render")
    x0, x1, y0, y1 = layout.extents()
    left, top = float(x0) - margin, -float(y1 + 1) - margin
    width, height = float(x1 - x0) + 1 + 2 * margin, float(y1 - y0) + 1 + 2 * margin
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        "<!-- unit-square visibility layout; transform: screen = (x, -y), 1 unit = "
        f"{unit}px -->",
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width * unit:g}" '
        f'height="{height * unit:g}" viewBox="{left:g} {top:g} {width:g} {height:g}">',
        '<g fill="#e8eef7" stroke="#24364f" stroke-width="0.03">',
    ]
    for s in layout:
        out.append(f'<rect x="{float(s.x):g}" y="{-float(s.y) - 1:g}" width="1" height="1"/>')
    out.append("</g>")
    if edges:
        split = split_xy(layout)
        out.append('<g stroke-width="0.04">')
        for colour, g, axis in (("#c0392b", split.gx, 0), ("#2e6da4", split.gy, 1)):
            for u, v in g.sorted_edges():
                a, b = layout[u], layout[v]
                if axis == 0:
                    lo, hi = max(a.y, b.y), min(a.y, b.y) + 1
                    y = -float((lo + hi) / 2)
                    xa, xb = sorted((a.x, b.x))
                    out.append(f'<line x1="{float(xa) + 1:g}" y1="{y:g}" x2="{float(xb):g}" y2="{y:g}" stroke="{colour}"/>')
                else:
                    lo, hi = max(a.x, b.x), min(a.x, b.x) + 1
                    x = float((lo + hi) / 2)
                    ya, yb = sorted((a.y, b.y))
                    out.append(f'<line x1="{x:g}" y1="{-float(ya) - 1:g}" x2="{x:g}" y2="{-float(yb):g}" stroke="{colour}"/>')
        out.append("</g>")
    out.append('<g font-family="sans-serif" font-size="0.35" text-anchor="middle">')
    for s in layout:
        out.append(f'<text x="{float(s.x) + 0.5:g}" y="{-float(s.y) - 0.4:g}">{escape(str(s.id))}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
