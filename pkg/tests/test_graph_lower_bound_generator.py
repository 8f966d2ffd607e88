import pytest

from curvilinearguard.dominate.domination_bounds import diag_bound, edge_bound
from curvilinearguard.errors import GeneratorError, MTooSmall
from curvilinearguard.lowerbounds.graph_lower_bound_generator import (
    gen_diag_lb,
    gen_edge_lb,
    gen_edge_lb_glued,
)
from curvilinearguard.oracle.brute_force_oracle import min_2dominating_set
from curvilinearguard.trigraph.triangulation_graph import Mode


@pytest.mark.parametrize("m, variant, n", [(2, 3, 8), (3, 1, 9), (3, 2, 10)])
def test_diagonal_family_is_tight(m, variant, n):
    graph = gen_diag_lb(m, variant)
    assert graph.n == n
    assert len(graph.diagonals) == n - 3
    assert min_2dominating_set(graph, Mode.DIAGONAL).size == diag_bound(n)


@pytest.mark.parametrize("m, residue, n", [(1, 0, 10), (1, 1, 11), (1, 3, 13)])
def test_edge_family_is_tight(m, residue, n):
    graph = gen_edge_lb(m, residue)
    assert graph.n == n
    assert min_2dominating_set(graph, Mode.EDGE).size == edge_bound(n)


@pytest.mark.parametrize("m, n", [(1, 7), (2, 12)])
def test_glued_family_is_tight(m, n):
    graph = gen_edge_lb_glued(m)
    assert graph.n == n
    assert min_2dominating_set(graph, Mode.EDGE).size == edge_bound(n)


def test_glued_copies_share_a_diagonal():
    assert (0, 6) in gen_edge_lb_glued(2).diagonals


def test_large_members_build():
    assert gen_diag_lb(20, 2).n == 61
    assert gen_edge_lb(8, 4).n == 49
    assert gen_edge_lb_glued(10).n == 52


def test_parameter_checks():
    with pytest.raises(MTooSmall):
        gen_diag_lb(1, 1)
    with pytest.raises(GeneratorError):
        gen_diag_lb(3, 4)
    with pytest.raises(MTooSmall):
        gen_edge_lb(0, 0)
    with pytest.raises(GeneratorError):
        gen_edge_lb(1, 2)
    with pytest.raises(MTooSmall):
        gen_edge_lb_glued(0)
