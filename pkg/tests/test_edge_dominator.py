import random

import pytest

from curvilinearguard.dominate.domination_bounds import edge_bound, edge_linear_bound
from curvilinearguard.dominate.edge_dominator import (
    edge_2dominate_linear,
    edge_2dominate_quadratic,
)
from curvilinearguard.dominate.recursive_engine import EngineStats
from curvilinearguard.dominate.small_sets import small_edge_set
from curvilinearguard.oracle.brute_force_oracle import min_2dominating_set
from curvilinearguard.trigraph.triangulation_generator import (
    enumerate_triangulations,
    fan_triangulation,
    random_triangulation,
)
from curvilinearguard.trigraph.triangulation_graph import (
    Mode,
    is_2_dominated,
    validate_members,
)

DOMINATORS = [
    (edge_2dominate_quadratic, edge_bound),
    (edge_2dominate_linear, edge_linear_bound),
]


@pytest.mark.parametrize("n", range(3, 10))
def test_small_sets_meet_the_bound(n):
    for graph in enumerate_triangulations(n):
        result = small_edge_set(graph)
        validate_members(graph, result)
        assert is_2_dominated(graph, result)
        assert len(result) <= edge_bound(n)


def test_quadrilateral_needs_two_edges():
    quad = fan_triangulation(4)
    result = edge_2dominate_quadratic(quad)
    assert len(result) == 2
    assert min_2dominating_set(quad, Mode.EDGE).size == 2


@pytest.mark.parametrize("dominate, bound", DOMINATORS)
@pytest.mark.parametrize("n", range(3, 10))
def test_every_small_triangulation(dominate, bound, n):
    for graph in enumerate_triangulations(n):
        result = dominate(graph)
        assert result.mode is Mode.EDGE
        validate_members(graph, result)
        assert all(graph.is_boundary(*member) for member in result.members)
        assert is_2_dominated(graph, result)
        assert len(result) <= bound(n)


@pytest.mark.slow
@pytest.mark.parametrize("dominate, bound", DOMINATORS)
@pytest.mark.parametrize("n", [10, 11, 12])
def test_every_medium_triangulation(dominate, bound, n):
    for graph in enumerate_triangulations(n):
        result = dominate(graph)
        assert is_2_dominated(graph, result)
        assert len(result) <= bound(n)


@pytest.mark.parametrize("dominate, bound", DOMINATORS)
@pytest.mark.parametrize("n", [25, 43, 150])
def test_large_random_triangulations(dominate, bound, n):
    rng = random.Random(n)
    for _ in range(5):
        graph = random_triangulation(n, seed=rng.randrange(10**6))
        stats = EngineStats()
        result = dominate(graph, stats)
        validate_members(graph, result)
        assert is_2_dominated(graph, result)
        assert stats.over_bound == 0
        assert len(result) <= bound(n)
        assert stats.reductions > 0


def test_results_match_the_oracle_lower_limit():
    rng = random.Random(1)
    for _ in range(30):
        graph = random_triangulation(rng.randint(3, 12), seed=rng.randrange(10**6))
        optimum = min_2dominating_set(graph, Mode.EDGE).size
        assert optimum <= edge_bound(graph.n)
        for dominate, _ in DOMINATORS:
            assert len(dominate(graph)) >= optimum


@pytest.mark.slow
@pytest.mark.parametrize("n", [100, 1000, 10000])
def test_linear_variant_pops_at_most_n(n):
    for graph in (fan_triangulation(n), random_triangulation(n, seed=n)):
        stats = EngineStats()
        result = edge_2dominate_linear(graph, stats)
        assert is_2_dominated(graph, result)
        assert len(result) <= edge_linear_bound(n)
        assert 0 < stats.pops <= n
