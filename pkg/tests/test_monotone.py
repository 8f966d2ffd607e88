import pytest

from curvilinearguard.dominate.domination_bounds import monotone_bound
from curvilinearguard.errors import NotMonotone
from curvilinearguard.geometry.guard_pipeline import Strategy, run_guard_pipeline
from curvilinearguard.geometry.visibility_checker import find_witness, verify_guard_set
from curvilinearguard.lowerbounds.polygon_lower_bound_generator import (
    gen_monotone_lb,
    gen_spike_polygon,
    locally_convex_fixtures,
    random_monotone_polygon,
)
from curvilinearguard.monotone.monotone_decomposer import LOWER, UPPER, decompose, is_x_monotone
from curvilinearguard.monotone.monotone_guard_selector import (
    monotone_edge_guards,
    select_group_edges,
)


def test_square_is_monotone(square, notched_polygon):
    assert is_x_monotone(square)
    assert is_x_monotone(notched_polygon)


def test_spikes_are_not_monotone():
    spikes = gen_spike_polygon(5)
    assert not is_x_monotone(spikes)
    with pytest.raises(NotMonotone):
        decompose(spikes)


def test_square_decomposition(square):
    decomposition = decompose(square)
    assert decomposition.n == 4
    assert decomposition.points[0] == (0, 0)
    assert decomposition.points[-1] == (4, 4)
    assert decomposition.corners == (None, 0, 3, 1, 2, None)
    assert decomposition.sigma == (0, 0, UPPER, LOWER, 0, 0)
    assert decomposition.left_edges[0] is None
    assert decomposition.right_edges[-1] is None


def test_decomposition_lengths():
    polygon = gen_monotone_lb(1, 2)
    decomposition = decompose(polygon)
    for column in (
        decomposition.points,
        decomposition.corners,
        decomposition.sigma,
        decomposition.left_edges,
        decomposition.right_edges,
        decomposition.opposite_edges,
    ):
        assert len(column) == polygon.n + 2
    assert set(decomposition.sigma[1:-1]) <= {LOWER, UPPER, 0}


def test_square_group_edges(square):
    choices = select_group_edges(decompose(square))
    # The second group lies right of the last vertex and has no edge to pick
    assert [c.edge for c in choices] == [0, None]
    assert choices[0].rule == "right-of-second"
    assert monotone_edge_guards(square).arc_indices == [0]


@pytest.mark.parametrize("variant, m, n", [(1, 4, 13), (2, 4, 12), (1, 2, 9)])
def test_monotone_family(variant, m, n):
    polygon = gen_monotone_lb(variant, m)
    assert polygon.n == n
    assert is_x_monotone(polygon)
    guards = monotone_edge_guards(polygon)
    assert len(guards) <= monotone_bound(n)


@pytest.mark.parametrize("seed", range(5))
def test_random_monotone_polygons(seed):
    polygon = random_monotone_polygon(7, seed=seed)
    assert polygon.n == 7
    assert is_x_monotone(polygon)
    assert len(monotone_edge_guards(polygon)) <= monotone_bound(7)


def test_locally_convex_fixtures():
    fixtures = locally_convex_fixtures()
    assert [p.n for p in fixtures] == [5, 6, 7, 8, 9]
    for polygon in fixtures:
        report = run_guard_pipeline(polygon, Strategy.MONOTONE)
        assert report.guard_count <= monotone_bound(polygon.n)
        assert all(0 <= g.index < polygon.n for g in report.guard_set)


@pytest.mark.parametrize("variant, m", [(1, 4), (2, 4)])
def test_monotone_family_is_covered_with_exact_bound(variant, m):
    polygon = gen_monotone_lb(variant, m)
    guards = monotone_edge_guards(polygon)
    assert len(guards) == monotone_bound(polygon.n)
    assert verify_guard_set(polygon, guards).covered


@pytest.mark.slow
def test_every_guard_of_the_odd_family_is_needed():
    polygon = gen_monotone_lb(1, 4)
    guards = monotone_edge_guards(polygon)
    assert len(guards) == 4
    for guard in guards.guards:
        assert find_witness(polygon, guards.without(guard), density=100) is not None, guard


@pytest.mark.slow
@pytest.mark.parametrize("i", range(50))
def test_random_monotone_corpus(i):
    n = 4 + i
    polygon = random_monotone_polygon(n, seed=i)
    assert is_x_monotone(polygon)
    guards = monotone_edge_guards(polygon)
    assert len(guards) <= monotone_bound(n)
    assert verify_guard_set(polygon, guards, density=50).covered
