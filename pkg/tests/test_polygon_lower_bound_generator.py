import pytest

from curvilinearguard.dominate.domination_bounds import edge_bound
from curvilinearguard.errors import GeneratorError, KTooSmall, MTooSmall, NTooSmall
from curvilinearguard.geometry.curvilinear_polygon import ArcKind, LocallyConvexPolygon
from curvilinearguard.geometry.guard_mapper import ArcGuard, GuardMode, GuardSet
from curvilinearguard.geometry.guard_pipeline import Strategy, run_guard_pipeline
from curvilinearguard.geometry.visibility_checker import find_witness
from curvilinearguard.lowerbounds.polygon_lower_bound_generator import (
    gen_fan_polygon,
    gen_monotone_lb,
    gen_spike_polygon,
    random_monotone_polygon,
    spike_arc,
    split_edges,
)
from curvilinearguard.monotone.monotone_decomposer import is_x_monotone


@pytest.mark.parametrize("k", [3, 4, 6])
def test_spike_polygon(k):
    polygon = gen_spike_polygon(k)
    assert polygon.n == 3 * k
    tips = [i for i, arc in enumerate(polygon.arcs) if arc.kind is not ArcKind.SEGMENT]
    assert tips == [spike_arc(i) for i in range(k)]


def test_spike_polygon_needs_every_spike():
    polygon = gen_spike_polygon(3)
    guards = GuardSet.of(GuardMode.EDGE, [ArcGuard(spike_arc(1)), ArcGuard(spike_arc(2))])
    assert find_witness(polygon, guards, density=20) is not None


def test_spike_polygon_limits():
    with pytest.raises(KTooSmall):
        gen_spike_polygon(2)
    assert not is_x_monotone(gen_spike_polygon(5))


def test_fan_polygon():
    polygon = gen_fan_polygon(6)
    assert polygon.n == 6
    assert all(arc.kind is not ArcKind.SEGMENT for arc in polygon.arcs)
    with pytest.raises(NTooSmall):
        gen_fan_polygon(2)


@pytest.mark.slow
def test_fan_polygon_edge_guards():
    report = run_guard_pipeline(gen_fan_polygon(9), Strategy.EDGE_QUADRATIC)
    assert report.guard_count <= edge_bound(9)


def test_monotone_family_limits():
    with pytest.raises(GeneratorError):
        gen_monotone_lb(3, 2)
    with pytest.raises(MTooSmall):
        gen_monotone_lb(1, -1)


def test_random_monotone_polygon_is_reproducible():
    first = random_monotone_polygon(8, seed=3)
    assert first.vertices == random_monotone_polygon(8, seed=3).vertices
    assert all(arc.is_segment for arc in random_monotone_polygon(8, seed=3, curved=False).arcs)
    with pytest.raises(NTooSmall):
        random_monotone_polygon(2)


def test_split_edges():
    polygon = random_monotone_polygon(6, seed=1, curved=False)
    split = split_edges(polygon)
    assert isinstance(split, LocallyConvexPolygon)
    assert split.n == 6
    assert split.vertices == polygon.vertices
    assert split.outline.n == 12
