from fractions import Fraction

import pytest

from curvilinearguard.errors import InvalidPolygon, NonSimple
from curvilinearguard.geometry.curvilinear_polygon import (
    ArcKind,
    ArcOrientation,
    LocallyConvexPolygon,
    build_locally_convex,
    build_polygon,
    bulging,
    circular,
    segment,
)


def test_square(square):
    assert square.n == 4
    assert square.corners == (0, 1, 2, 3)
    assert all(arc.kind is ArcKind.SEGMENT for arc in square.arcs)
    assert square.vertex(5) == (Fraction(4), Fraction(0))
    assert square.bounds() == pytest.approx((0.0, 0.0, 4.0, 4.0))


def test_coordinates_are_exact():
    polygon = build_polygon([("0.1", "0"), (1, 0), (1, "0.3")])
    assert polygon.vertex(0)[0] == Fraction(1, 10)
    assert polygon.vertex(2)[1] == Fraction(3, 10)


def test_bulging_arc_geometry():
    arc = bulging((0, 0), (4, 0), 1)
    assert arc.center == (Fraction(2), Fraction(4))
    assert arc.radius_squared == 20
    lowest = arc.point_at(0.5)
    assert lowest[0] == pytest.approx(2.0)
    assert lowest[1] == pytest.approx(4 - 20**0.5)


def test_bulging_square_contains_its_room(bulging_square):
    assert bulging_square.contains((2.0, -0.2))
    assert bulging_square.interior_contains((2.0, 2.0))
    assert not bulging_square.contains((2.0, -1.0))
    assert not bulging_square.contains((5.0, 2.0))
    # Boundary points belong to the closure only
    assert bulging_square.contains((4.0, 2.0))
    assert not bulging_square.interior_contains((4.0, 2.0))


def test_lens_with_two_vertices():
    lens = build_polygon(
        [(0, 0), (4, 0)],
        [bulging((0, 0), (4, 0), 1), bulging((4, 0), (0, 0), 1)],
    )
    assert lens.n == 2
    assert lens.contains((2.0, 0.3))
    assert lens.contains((2.0, -0.3))


@pytest.mark.parametrize(
    "vertices, arcs",
    [
        ([(0, 0)], None),
        ([(0, 0), (4, 0)], None),
        ([(0, 0), (4, 0), (4, 0)], None),
        ([(0, 0), (0, 4), (4, 4), (4, 0)], None),
        ([(0, 0), (4, 0), (4, 4)], [segment((0, 0), (4, 4)), None, None]),
        ([(0, 0), (4, 0), (4, 4)], [circular((0, 0), (4, 0), (1, 3)), None, None]),
        (
            [(0, 0), (4, 0), (4, 4)],
            [circular((0, 0), (4, 0), (2, 2), ArcOrientation.CW), None, None],
        ),
        ([(0, 0), (4, 0), (4, 4)], [circular((0, 0), (4, 0), (2, -2)), None, None]),
    ],
)
def test_invalid_polygons(vertices, arcs):
    with pytest.raises(InvalidPolygon):
        build_polygon(vertices, arcs)


def test_self_intersecting_polygon():
    with pytest.raises(NonSimple):
        build_polygon([(0, 0), (4, 4), (4, 0), (0, 4)])


def test_arc_crossing_another_edge():
    # Vertex 3 lies below the bottom arc, so the edges through it cross the arc
    with pytest.raises(NonSimple):
        build_polygon(
            [(0, 0), (10, 0), (10, 5), (5, -4), (0, 5)],
            [bulging((0, 0), (10, 0), Fraction(1, 4)), None, None, None, None],
        )


def test_locally_convex_polygon():
    vertices = [(0, 0), (2, -1), (4, 0), (4, 4), (0, 4)]
    polygon = build_locally_convex(vertices, [None] * 5, corners=[0, 2, 3, 4])
    assert isinstance(polygon, LocallyConvexPolygon)
    assert polygon.n == 4
    assert polygon.edge_arcs(0) == (0, 1)
    assert polygon.edge_of_arc(1) == 0
    assert polygon.vertices[1] == (Fraction(4), Fraction(0))


def test_locally_convex_rejects_reflex_joints():
    vertices = [(0, 0), (2, 1), (4, 0), (4, 4), (0, 4)]
    with pytest.raises(InvalidPolygon):
        build_locally_convex(vertices, [None] * 5, corners=[0, 2, 3, 4])
