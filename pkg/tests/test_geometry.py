from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import ray_visibility_edges
from strategies import layouts
from urvkit.geometry import (
    HORIZONTAL,
    VERTICAL,
    Layout,
    LayoutError,
    as_rational,
    extract_graph,
    insert_horizontal_band,
    insert_vertical_band,
    neighbours,
    reflect_x,
    reflect_y,
    require_valid,
    split_xy,
    transform,
    translate,
    transpose,
    validate_layout,
    visible,
)


def L(**kw):
    return Layout.from_coords({k: v for k, v in kw.items()})


def test_floats_are_refused():
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(ValueError):
        as_rational("0.5")
    assert as_rational("3/6") == F(1, 2)


def test_touching_sides_are_adjacent():
    lay = L(a=(0, 0), b=(1, F(1, 2)))
    assert visible(lay, "a", "b", HORIZONTAL)
    assert extract_graph(lay).has_edge("a", "b")


def test_corner_touch_is_not_adjacent():
    lay = L(a=(0, 0), b=(1, 1))
    assert not extract_graph(lay).edges


def test_full_blocker_hides():
    lay = L(a=(0, 0), b=(4, 0), c=(2, 0))
    g = extract_graph(lay)
    assert not g.has_edge("a", "b")
    assert g.has_edge("a", "c") and g.has_edge("c", "b")


def test_partial_blocker_leaves_a_band():
    lay = L(a=(0, 0), b=(4, 0), c=(2, F(1, 3)))
    assert visible(lay, "a", "b")


def test_two_blockers_meeting_at_a_point_still_block():
    # [-1/2, 1/2] and [1/2, 3/2] cover (0, 1) between them
    lay = L(a=(0, 0), b=(5, 0), c=(2, F(-1, 2)), d=(3, F(1, 2)))
    assert not visible(lay, "a", "b")


def test_vertical_axis_and_split():
    lay = L(a=(0, 0), b=(F(1, 2), 3), c=(2, F(1, 2)))
    s = split_xy(lay)
    assert s.gy.has_edge("a", "b")
    assert s.gx.has_edge("a", "c")
    assert not (s.gx.edges & s.gy.edges)
    assert neighbours(lay, "a") == {"b": VERTICAL, "c": HORIZONTAL}


def test_overlap_detection():
    lay = L(a=(0, 0), b=(F(1, 2), F(1, 2)), c=(5, 5))
    assert validate_layout(lay) == [("a", "b")]
    with pytest.raises(LayoutError):
        require_valid(lay)
    with pytest.raises(LayoutError):
        extract_graph(lay)


def test_duplicate_ids_rejected():
    with pytest.raises(LayoutError):
        Layout.from_coords([("a", 0, 0), ("a", 2, 2)])


def test_band_through_interior_rejected():
    lay = L(a=(0, 0))
    with pytest.raises(LayoutError):
        insert_horizontal_band(lay, F(1, 2))


@given(layouts())
@settings(max_examples=1000)
def test_sweep_matches_ray_oracle(lay):
    hor, ver = ray_visibility_edges(lay.coords())
    s = split_xy(lay)
    assert s.gx.edges == hor
    assert s.gy.edges == ver


@given(layouts(max_size=8))
@settings(max_examples=150)
def test_sweep_matches_literal_definition(lay):
    s = split_xy(lay)
    ids = lay.ids
    for i, a in enumerate(ids):
        for b in ids[i + 1:]:
            assert visible(lay, a, b, HORIZONTAL) == s.gx.has_edge(a, b)
            assert visible(lay, a, b, VERTICAL) == s.gy.has_edge(a, b)


@given(layouts(), st.fractions(max_denominator=7), st.fractions(max_denominator=7))
@settings(max_examples=1000)
def test_rigid_motions_preserve_graph(lay, dx, dy):
    g = extract_graph(lay)
    assert extract_graph(translate(lay, dx, dy)) == g
    assert extract_graph(reflect_x(lay)) == g
    assert extract_graph(reflect_y(lay)) == g
    s, t = split_xy(lay), split_xy(transpose(lay))
    assert s.gx == t.gy and s.gy == t.gx
    assert extract_graph(transform(lay, "translate", dx, dy)) == g


@given(layouts(), st.integers(0, 4 * 6))
@settings(max_examples=1000)
def test_band_insertion_preserves_graph(lay, k):
    t = F(k, 6)
    if any(sq.y < t < sq.y + 1 for sq in lay):
        return
    assert extract_graph(insert_horizontal_band(lay, t)) == extract_graph(lay)
    if not any(sq.x < t < sq.x + 1 for sq in lay):
        assert extract_graph(insert_vertical_band(lay, t)) == extract_graph(lay)
