from fractions import Fraction

import pytest

from curvilinearguard.geometry.curvilinear_polygon import build_polygon, bulging


@pytest.fixture
def square():
    return build_polygon([(0, 0), (4, 0), (4, 4), (0, 4)])


@pytest.fixture
def bulging_square():
    return build_polygon(
        [(0, 0), (4, 0), (4, 4), (0, 4)],
        [bulging((0, 0), (4, 0), 1), None, None, None],
    )


@pytest.fixture
def notched_polygon():
    # Vertex 3 dips below the chord of the bottom arc, into its room
    return build_polygon(
        [(0, 0), (10, 0), (10, 5), (5, -1), (0, 5)],
        [bulging((0, 0), (10, 0), Fraction(1, 4)), None, None, None, None],
    )


@pytest.fixture
def double_notched_polygon():
    # Vertices 3 and 4 both sit in the room of the bottom arc
    return build_polygon(
        [(0, 0), (12, 0), (12, 6), (8, -1), (4, -1), (0, 6)],
        [bulging((0, 0), (12, 0), Fraction(1, 4)), None, None, None, None, None],
    )
