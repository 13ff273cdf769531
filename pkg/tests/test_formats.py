from fractions import Fraction as F
from xml.etree import ElementTree

import pytest
from hypothesis import given

from strategies import layouts, trees
from urvkit.decompose import classify_tree
from urvkit.formats import (
    FormatError,
    graph_to_json,
    layout_to_json,
    read_decomposition,
    read_graph,
    read_layout,
    render_svg,
    to_dot,
    write_decomposition,
    write_graph,
    write_layout,
)
from urvkit.geometry import extract_graph
from urvkit.graph import Graph, complete_graph


def test_layout_text_normalises_rationals():
    lay = read_layout("# comment\n\na 2/4 -3   # trailing\nb 6/3 0\n")
    assert lay["a"].x == F(1, 2)
    assert write_layout(lay) == "a 1/2 -3\nb 2 0\n"


@pytest.mark.parametrize(
    "text,line,col",
    [("a 1\n", 1, 1), ("a 0 0\nb 1.5 0\n", 2, 3), ("a 0 0\na 3 3\n", 2, 1), ("a 0 x/y\n", 1, 5)],
)
def test_layout_diagnostics(text, line, col):
    with pytest.raises(FormatError) as info:
        read_layout(text, "f.layout")
    assert (info.value.line, info.value.column) == (line, col)
    assert str(info.value).startswith(f"f.layout:{line}:{col}")


@given(layouts())
def test_layout_round_trip(lay):
    again = read_layout(write_layout(lay))
    assert again == lay
    assert write_layout(again) == write_layout(lay)


def test_graph_text():
    g = read_graph("1 2\n2 3\n7\n")
    assert g.vertices == {1, 2, 3, 7} and len(g.edges) == 2
    assert read_graph(write_graph(g)) == g
    with pytest.raises(FormatError):
        read_graph("1 1\n")


@given(trees(min_size=2, max_size=10))
def test_decomposition_round_trip(t):
    d = classify_tree(t).decomposition
    if d is None:
        return
    g, d2 = read_decomposition(write_decomposition(d))
    assert g == t and d2 == d and d2.roles == d.roles


def test_dot_and_json():
    g = complete_graph(4)
    dot = to_dot(g)
    assert dot.count("--") == 6 and dot.startswith("graph G {")
    assert '"format": 1' in graph_to_json(g)
    lay = read_layout("a 0 0\nb 1 0\n")
    assert '"x": "1"' in layout_to_json(lay)
    assert to_dot(Graph.from_edges([("a b", "c")])).count('"a b"') == 2


def test_svg_is_well_formed():
    lay = read_layout("a 0 0\nb 1 1/3\nc 1/2 2\n")
    svg = render_svg(lay, edges=True)
    root = ElementTree.fromstring(svg.split("\n", 1)[1])
    ns = "{http://www.w3.org/2000/svg}"
    assert len(root.findall(f".//{ns}rect")) == 3
    assert len(root.findall(f".//{ns}line")) == len(extract_graph(lay).edges)
    assert "screen = (x, -y)" in svg
