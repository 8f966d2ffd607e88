import pytest

from curvilinearguard.dominate.algorithm_registry import (
    ALGORITHMS,
    DEFAULT_ALGORITHM,
    algorithm_for,
)
from curvilinearguard.dominate.domination_bounds import (
    bound_for,
    diag_bound,
    edge_bound,
    edge_linear_bound,
    edge_lower_bound,
    mobile_lower_bound,
    monotone_bound,
)
from curvilinearguard.trigraph.triangulation_graph import Mode


@pytest.mark.parametrize(
    "n, diag, edge, linear",
    [
        (3, 1, 1, 1),
        (4, 1, 2, 2),
        (5, 2, 2, 2),
        (7, 2, 3, 3),
        (12, 4, 5, 5),
        (100, 33, 40, 42),
    ],
)
def test_upper_bounds(n, diag, edge, linear):
    assert diag_bound(n) == diag
    assert edge_bound(n) == edge
    assert edge_linear_bound(n) == linear


@pytest.mark.parametrize("n, monotone, mobile, edge", [(5, 2, 1, 2), (12, 4, 4, 4), (13, 4, 4, 5)])
def test_lower_and_monotone_bounds(n, monotone, mobile, edge):
    assert monotone_bound(n) == monotone
    assert mobile_lower_bound(n) == mobile
    assert edge_lower_bound(n) == edge


def test_bound_for_mode():
    assert bound_for(Mode.DIAGONAL, 11) == 4
    assert bound_for(Mode.EDGE, 11) == 4


def test_registry():
    assert set(ALGORITHMS) == {"diag-linear", "diag-contract", "edge-quadratic", "edge-linear"}
    assert algorithm_for("edge-linear").mode is Mode.EDGE
    assert algorithm_for("diag-contract").bound(8) == 3
    for mode, name in DEFAULT_ALGORITHM.items():
        assert algorithm_for(name).mode is mode
    with pytest.raises(KeyError):
        algorithm_for("greedy")
