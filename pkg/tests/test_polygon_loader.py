from fractions import Fraction

import pytest

from curvilinearguard.config.graph_loader import write_json_file
from curvilinearguard.config.polygon_loader import (
    fraction_text,
    guard_set_from_data,
    guard_set_to_data,
    load_guard_set,
    load_polygon,
    polygon_from_data,
    polygon_to_data,
)
from curvilinearguard.errors import FormatError, InvalidPolygon
from curvilinearguard.geometry.curvilinear_polygon import LocallyConvexPolygon, build_locally_convex
from curvilinearguard.geometry.guard_mapper import ArcGuard, DiagonalGuard, GuardMode, GuardSet


@pytest.mark.parametrize(
    "value, text",
    [
        (Fraction(1, 10), "0.1"),
        (Fraction(1, 3), "1/3"),
        (Fraction(-5, 4), "-1.25"),
        (Fraction(7), "7"),
        (Fraction(-1, 20), "-0.05"),
    ],
)
def test_fraction_text(value, text):
    assert fraction_text(value) == text


def test_polygon_file(tmp_path, notched_polygon):
    path = tmp_path / "notched.json"
    write_json_file(str(path), polygon_to_data(notched_polygon))
    assert load_polygon(str(path)) == notched_polygon


def test_exact_coordinates():
    polygon = polygon_from_data(
        {
            "vertices": [["0", "0"], ["4", "0"], ["4", "4"], ["0", "4"]],
            "arcs": [
                {"type": "circular", "center": ["2", "4"]},
                {"type": "segment"},
                {"type": "segment"},
                {"type": "segment"},
            ],
        }
    )
    assert polygon.arcs[0].center == (Fraction(2), Fraction(4))
    assert polygon_to_data(polygon)["arcs"][0] == {
        "type": "circular",
        "center": ["2", "4"],
        "orientation": "ccw",
    }


def test_locally_convex_file():
    polygon = build_locally_convex(
        [(0, 0), (2, -1), (4, 0), (4, 4), (0, 4)], [None] * 5, corners=[0, 2, 3, 4]
    )
    data = polygon_to_data(polygon)
    assert data["corners"] == [0, 2, 3, 4]
    loaded = polygon_from_data(data)
    assert isinstance(loaded, LocallyConvexPolygon)
    assert loaded.vertices == polygon.vertices


@pytest.mark.parametrize(
    "data",
    [
        {"arcs": []},
        {"vertices": [[0, 0], [4, 0], [4]]},
        {"vertices": [[0, 0], [4, 0], ["four", 4]]},
        {"vertices": [[0, 0], [4, 0], [4, 4]], "arcs": [{"type": "segment"}]},
        {"vertices": [[0, 0], [4, 0], [4, 4]], "arcs": [{"type": "spline"}] * 3},
        {"vertices": [[0, 0], [4, 0], [4, 4]], "arcs": [{"type": "circular"}] * 3},
    ],
)
def test_malformed_polygons(data):
    with pytest.raises(FormatError):
        polygon_from_data(data)


def test_geometry_is_validated():
    with pytest.raises(InvalidPolygon):
        polygon_from_data({"vertices": [[0, 0], [0, 4], [4, 4], [4, 0]]})


def test_guard_set_file(tmp_path):
    guards = GuardSet.of(GuardMode.MOBILE, [DiagonalGuard.of(3, 1), ArcGuard(0)])
    path = tmp_path / "guards.json"
    write_json_file(str(path), guard_set_to_data(guards))
    assert load_guard_set(str(path)) == guards


@pytest.mark.parametrize(
    "data",
    [
        {"mode": "static", "guards": []},
        {"mode": "edge", "guards": [{}]},
        {"mode": "edge", "guards": [{"arc": 1, "diagonal": [0, 2]}]},
        {"mode": "mobile", "guards": [{"diagonal": [0, 2, 3]}]},
    ],
)
def test_malformed_guard_sets(data):
    with pytest.raises(FormatError):
        guard_set_from_data(data)
