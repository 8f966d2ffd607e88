import pytest

from curvilinearguard.errors import NotADiagonal, TooFewVertices
from curvilinearguard.trigraph.graph_splitter import (
    find_separating_diagonal,
    glue_along,
    side_start,
    split_along,
    split_side,
    subpolygon,
)
from curvilinearguard.trigraph.triangulation_generator import (
    enumerate_triangulations,
    fan_triangulation,
    random_triangulation,
)
from curvilinearguard.trigraph.triangulation_graph import build_from_diagonals


@pytest.mark.parametrize("n", range(4, 11))
def test_separating_diagonal_stays_within_limits(n):
    for graph in enumerate_triangulations(n):
        for lam in range(2, n // 2 + 1):
            separation = find_separating_diagonal(graph, lam)
            assert graph.is_diagonal(*separation.diagonal)
            assert lam <= separation.k <= 2 * (lam - 1)


def test_separating_diagonal_needs_enough_vertices():
    with pytest.raises(TooFewVertices):
        find_separating_diagonal(fan_triangulation(7), 4)
    with pytest.raises(TooFewVertices):
        find_separating_diagonal(fan_triangulation(7), 1)


def test_side_start_walks_the_small_side():
    graph = fan_triangulation(8)
    separation = find_separating_diagonal(graph, 3)
    start = side_start(graph, separation)
    end = (start + separation.k) % graph.n
    a, b = separation.diagonal
    assert {start, end} == {a, b}


def test_split_side_labels():
    graph = fan_triangulation(7)
    side, rest = split_side(graph, 0, 4)
    assert side.n == 5
    assert rest.n == 4
    assert side.labels == (0, 1, 2, 3, 4)
    assert rest.labels == (4, 5, 6, 0)
    assert side.diagonals == ((0, 2), (0, 3))
    assert rest.diagonals == ((1, 3),)


@pytest.mark.parametrize("seed", range(5))
def test_split_and_glue_round_trip(seed):
    graph = random_triangulation(14, seed=seed)
    for diagonal in graph.diagonals:
        first, second = split_along(graph, diagonal)
        assert first.n + second.n == graph.n + 2
        assert glue_along(first, second) == graph


def test_split_along_rejects_boundary_edge():
    with pytest.raises(NotADiagonal):
        split_along(fan_triangulation(6), (0, 1))


def test_subpolygon_of_star():
    graph = build_from_diagonals(6, [(0, 2), (2, 4), (0, 4)])
    part = subpolygon(graph, [0, 1, 2, 4])
    assert part.n == 4
    assert part.diagonals == ((0, 2),)
    assert part.labels == (0, 1, 2, 4)
