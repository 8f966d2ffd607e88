import random

import pytest

from curvilinearguard.errors import (
    AdjacentPair,
    CrossingDiagonals,
    DuplicateDiagonal,
    ForeignMember,
    LabelOutOfRange,
    NonEdgeMember,
    TooSmall,
    WrongDiagonalCount,
)
from curvilinearguard.trigraph.dual_tree import dual_tree
from curvilinearguard.trigraph.triangulation_generator import (
    fan_triangulation,
    random_triangulation,
)
from curvilinearguard.trigraph.triangulation_graph import (
    DominatingSet,
    Mode,
    build_from_diagonals,
    edge_key,
    find_crossing_pair,
    is_2_dominated,
    uncovered_vertices,
    validate_members,
)


def test_fan_counts():
    graph = fan_triangulation(6)
    assert graph.n == 6
    assert len(graph.edges) == 9
    assert len(graph.triangles) == 4
    assert graph.diagonals == ((0, 2), (0, 3), (0, 4))


def test_triangle_has_no_diagonals():
    graph = build_from_diagonals(3, [])
    assert graph.triangles == [(0, 1, 2)]
    assert graph.boundary_edges == [(0, 1), (1, 2), (0, 2)]


@pytest.mark.parametrize(
    "n, diagonals, error",
    [
        (2, [], TooSmall),
        (5, [(0, 2)], WrongDiagonalCount),
        (5, [(0, 7), (0, 2)], LabelOutOfRange),
        (5, [(0, 1), (0, 2)], AdjacentPair),
        (5, [(0, 2), (2, 0)], DuplicateDiagonal),
        (5, [(0, 2), (1, 3)], CrossingDiagonals),
        (6, [(0, 3), (1, 4), (0, 2)], CrossingDiagonals),
    ],
)
def test_build_rejects_invalid_input(n, diagonals, error):
    with pytest.raises(error):
        build_from_diagonals(n, diagonals)


def test_edge_key_is_unordered():
    assert edge_key(4, 1) == (1, 4)
    assert edge_key(1, 4) == (1, 4)


def test_find_crossing_pair():
    assert find_crossing_pair({(0, 2), (0, 3)}) is None
    assert find_crossing_pair({(0, 3), (1, 5)}) == ((0, 3), (1, 5))


def test_neighbours_and_apex():
    graph = fan_triangulation(5)
    assert graph.neighbours[0] == [1, 2, 3, 4]
    assert graph.neighbours[2] == [3, 0, 1]
    assert sorted(graph.third_vertices(0, 2)) == [1, 3]
    assert graph.apex_between(0, 2) == 1
    assert graph.apex_between(2, 0) == 3
    assert graph.apex_between(0, 1) is None


def test_edge_predicates():
    graph = fan_triangulation(5)
    assert graph.is_boundary(4, 0)
    assert graph.is_diagonal(2, 0)
    assert graph.has_edge(0, 3)
    assert not graph.has_edge(1, 3)
    assert not graph.has_edge(0, 5)


def test_half_edges_are_consistent():
    graph = random_triangulation(9, seed=4)
    half_edges = graph.half_edges
    assert len(half_edges) == 2 * (2 * 9 - 3)
    for index, h in enumerate(half_edges):
        twin = half_edges[h.twin]
        assert twin.twin == index
        assert (twin.origin, twin.target) == (h.target, h.origin)
        assert half_edges[h.next].origin == h.target
        if h.face is not None:
            assert half_edges[half_edges[half_edges[h.next].next].next] == h


def test_marked_half_edges():
    graph = fan_triangulation(5)
    marked = graph.marked_half_edges(DominatingSet.of(Mode.DIAGONAL, [(0, 2)]))
    flagged = {(h.origin, h.target) for h in marked if h.in_set}
    assert flagged == {(0, 2), (2, 0)}


def test_two_domination():
    graph = build_from_diagonals(3, [])
    assert is_2_dominated(graph, DominatingSet.of(Mode.EDGE, [(0, 1)]))
    assert not is_2_dominated(graph, DominatingSet.of(Mode.EDGE, []))

    quad = fan_triangulation(4)
    assert is_2_dominated(quad, DominatingSet.of(Mode.DIAGONAL, [(0, 2)]))
    assert not is_2_dominated(quad, DominatingSet.of(Mode.EDGE, [(0, 1)]))
    assert uncovered_vertices(quad, DominatingSet.of(Mode.EDGE, [(0, 1)])) == {2, 3}


def test_foreign_member_is_rejected():
    quad = fan_triangulation(4)
    with pytest.raises(ForeignMember):
        is_2_dominated(quad, DominatingSet.of(Mode.DIAGONAL, [(1, 3)]))
    with pytest.raises(NonEdgeMember):
        validate_members(quad, DominatingSet.of(Mode.EDGE, [(0, 2)]))


def test_random_triangulations_are_maximal_outerplanar():
    rng = random.Random(0)
    for _ in range(100):
        n = rng.randint(3, 40)
        graph = random_triangulation(n, seed=rng.randrange(10**6))
        assert len(graph.edges) == 2 * n - 3
        assert len(graph.triangles) == n - 2
        tree = dual_tree(graph)
        assert tree.node_count == n - 2
        assert tree.link_count == n - 3
        assert tree.max_degree() <= 3


def test_dual_tree_of_fan_is_path():
    tree = dual_tree(fan_triangulation(7))
    assert tree.is_path()
    for a, b, diagonal in tree.links:
        assert tree.diagonal_of(a, b) == diagonal


def test_dual_tree_of_star_is_not_path():
    # Central triangle 0-2-4 with three ears
    tree = dual_tree(build_from_diagonals(6, [(0, 2), (2, 4), (0, 4)]))
    assert tree.max_degree() == 3
    assert not tree.is_path()


def test_with_labels_keeps_structure():
    graph = fan_triangulation(4).with_labels([7, 8, 9, 10])
    assert graph.label(2) == 9
    assert graph == fan_triangulation(4)
