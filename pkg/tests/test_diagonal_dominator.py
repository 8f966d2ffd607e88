import random

import pytest

from curvilinearguard.dominate.diagonal_dominator import (
    diag_2dominate_contraction,
    diag_2dominate_linear,
)
from curvilinearguard.dominate.domination_bounds import diag_bound
from curvilinearguard.dominate.recursive_engine import EngineStats
from curvilinearguard.dominate.small_sets import small_diag_set
from curvilinearguard.errors import OutOfRange
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

DOMINATORS = [diag_2dominate_linear, diag_2dominate_contraction]


@pytest.mark.parametrize("n", range(3, 8))
def test_small_sets_meet_the_bound(n):
    for graph in enumerate_triangulations(n):
        result = small_diag_set(graph)
        validate_members(graph, result)
        assert is_2_dominated(graph, result)
        assert len(result) <= diag_bound(n)


def test_small_sets_reject_large_graphs():
    with pytest.raises(OutOfRange):
        small_diag_set(fan_triangulation(8))


@pytest.mark.parametrize("dominate", DOMINATORS)
@pytest.mark.parametrize("n", range(3, 10))
def test_every_small_triangulation(dominate, n):
    for graph in enumerate_triangulations(n):
        result = dominate(graph)
        assert result.mode is Mode.DIAGONAL
        validate_members(graph, result)
        assert is_2_dominated(graph, result)
        assert len(result) <= diag_bound(n)


@pytest.mark.slow
@pytest.mark.parametrize("dominate", DOMINATORS)
@pytest.mark.parametrize("n", [10, 11, 12])
def test_every_medium_triangulation(dominate, n):
    for graph in enumerate_triangulations(n):
        result = dominate(graph)
        assert is_2_dominated(graph, result)
        assert len(result) <= diag_bound(n)


def test_never_below_the_optimum():
    rng = random.Random(0)
    for _ in range(30):
        graph = random_triangulation(rng.randint(4, 12), seed=rng.randrange(10**6))
        optimum = min_2dominating_set(graph, Mode.DIAGONAL).size
        for dominate in DOMINATORS:
            assert len(dominate(graph)) >= optimum


@pytest.mark.parametrize("dominate", DOMINATORS)
@pytest.mark.parametrize("n", [30, 61, 200])
def test_large_random_triangulations(dominate, n):
    rng = random.Random(n)
    for _ in range(5):
        graph = random_triangulation(n, seed=rng.randrange(10**6))
        stats = EngineStats()
        result = dominate(graph, stats)
        validate_members(graph, result)
        assert is_2_dominated(graph, result)
        assert stats.over_bound == 0
        assert len(result) <= diag_bound(n)
        assert stats.reductions > 0


def test_fan_of_one_hundred():
    graph = fan_triangulation(100)
    result = diag_2dominate_linear(graph)
    assert is_2_dominated(graph, result)


def test_stats_merge():
    first = EngineStats(pops=2, reductions=1)
    first.merge(EngineStats(pops=3, oracle_calls=1))
    assert first.pops == 5
    assert first.reductions == 1
    assert first.oracle_calls == 1


@pytest.mark.slow
@pytest.mark.parametrize("n", [100, 1000, 10000])
def test_linear_variant_pops_at_most_n(n):
    for graph in (fan_triangulation(n), random_triangulation(n, seed=n)):
        stats = EngineStats()
        result = diag_2dominate_linear(graph, stats)
        assert is_2_dominated(graph, result)
        assert len(result) <= diag_bound(n)
        assert 0 < stats.pops <= n
