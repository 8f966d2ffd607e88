import pytest

from curvilinearguard.trigraph.graph_splitter import find_separating_diagonal
from curvilinearguard.trigraph.subtree_shape_classifier import (
    SHAPE_LAMBDA,
    classify_subtree_shape,
    rooted_trees,
    shape_k,
    shape_table,
)
from curvilinearguard.trigraph.triangulation_generator import (
    enumerate_triangulations,
    fan_triangulation,
)
from curvilinearguard.trigraph.triangulation_graph import Mode


@pytest.mark.parametrize("size, count", [(1, 1), (2, 1), (3, 2), (4, 3), (5, 6), (6, 11)])
def test_rooted_tree_counts(size, count):
    assert len(rooted_trees(size)) == count


def test_shape_ids_carry_k():
    for mode, lam in SHAPE_LAMBDA.items():
        for shape_id in shape_table(lam).values():
            assert lam <= shape_k(shape_id) <= 2 * (lam - 1)


def test_fan_side_is_classified():
    shape = classify_subtree_shape(fan_triangulation(8), (0, 4), Mode.DIAGONAL)
    assert shape is not None
    assert shape_k(shape) == 4


def test_non_minimal_side_is_not_classified():
    # Both sides of (0, 5) in the fan either hold (0, 4) with k = 4 or cut off only 3 edges
    assert classify_subtree_shape(fan_triangulation(8), (0, 5), Mode.DIAGONAL) is None


def test_boundary_edge_has_no_shape():
    assert classify_subtree_shape(fan_triangulation(8), (0, 1), Mode.DIAGONAL) is None


@pytest.mark.parametrize(
    "mode, n",
    [
        (Mode.DIAGONAL, 8),
        (Mode.DIAGONAL, 9),
        pytest.param(Mode.EDGE, 12, marks=pytest.mark.slow),
    ],
)
def test_separating_diagonals_always_match_a_shape(mode, n):
    lam = SHAPE_LAMBDA[mode]
    for graph in enumerate_triangulations(n):
        separation = find_separating_diagonal(graph, lam)
        shape = classify_subtree_shape(graph, separation.diagonal, mode)
        assert shape is not None
        assert lam <= shape_k(shape) <= 2 * (lam - 1)
